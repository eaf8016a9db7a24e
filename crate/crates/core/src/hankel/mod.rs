//! Shifted Hankel determinants, their closed-form polynomials and the
//! identities linking them.

pub mod closed_forms;
pub mod condensation;
pub mod normalized;
pub mod table;
pub mod theorem10;
pub mod verify;

pub use closed_forms::{det_poly_hb, h_poly, product_poly_h, product_poly_h2, v_poly, PolyKind};
pub use condensation::{condensation_check, condensation_reconstruct};
pub use normalized::{normalized_shifted, Normalized};
pub use table::{first_hankels_from_jacobi, hankel_det, HankelGrid, HankelTable};
pub use theorem10::theorem10_check;
pub use verify::{verify_theorem, Grid, TheoremTag};
