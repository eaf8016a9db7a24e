//! Staircase plane partitions, their two path-family encodings and
//! nonintersecting path counts.

pub mod checks;
pub mod dyck;
pub mod hv;
pub mod lgv;
pub mod partition;
pub mod paths;

pub use checks::{count_pp_vs_formulas, verify_bijections, verify_pp_counts};
pub use dyck::{dyck_to_pp, pp_to_dyck};
pub use hv::{hv_to_pp, pp_to_hv};
pub use lgv::{count_nonintersecting_brute, lgv_count};
pub use partition::{count_pp, enumerate_pp, PlanePartition};
pub use paths::{LatticePath, Model, PathFamily, Step};
