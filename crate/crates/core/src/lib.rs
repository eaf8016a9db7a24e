pub mod error;
pub mod exact;
pub mod hankel;
pub mod ortho;
pub mod report;
pub mod staircase;
pub mod suites;
