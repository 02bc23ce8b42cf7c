//! Construction and entanglement analysis of a parametric family of
//! two-ququart (4 x 4) mixed states.
//!
//! The crate builds the states from antisymmetric coefficient matrices,
//! evaluates the partial-transpose spectrum both in closed form and with a
//! Jacobi eigensolver, computes realignment (CCNR) and partial-transpose
//! trace norms, and runs the range criterion: product vectors in the range,
//! their partial complex conjugates, and a witness membership test.

pub mod error;
pub mod linalg;
pub mod ppt;
pub mod range;
pub mod state;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, RangeBasis};
pub use num_complex::Complex64;
pub use ppt::{CriterionReport, SpectrumReport, Subsystem};
pub use range::{Certificate, FamilyTag, ProductVector, Sampling, Verdict};
pub use state::{DensityMatrix, FamilyParams};
