//! Orthogonal-polynomial machinery: Jacobi parameters, named families,
//! expansion coefficients, moment sequences, number triangles and generating series.

pub mod basis;
pub mod families;
pub mod genfunc;
pub mod jacobi;
pub mod moments;
pub mod triangle;

pub use basis::{verify_basis_expansion, BasisKind};
pub use families::{named_poly, NamedKind};
pub use genfunc::{gf_coeffs, GfFamily};
pub use jacobi::{expansion_coeffs, moment, ortho_poly, JacobiSpec, ParamSeq};
pub use moments::{sequence_term, sequence_term_formal, MomentSequence, SequenceFamily};
pub use triangle::{triangle_entry, triangle_row, TriangleKind};
