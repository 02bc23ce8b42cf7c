//! Dense complex linear algebra for small matrices.

mod eig;
mod matrix;
mod subspace;
mod svd;

pub use eig::{
    hermitian_eig, hermitian_eigenvalues, HermitianEigen, HERMITIAN_TOL, MAX_SWEEPS,
    OFF_DIAGONAL_TOL,
};
pub use matrix::{basis_vector, inner, kron, kron_vec, norm, normalized, ComplexMatrix};
pub use subspace::{orthonormal_range, span_of, subspace_contains, RangeBasis, DEFAULT_RANK_TOL};
pub use svd::{hermitian_trace_norm, singular_values, spectral_norm, trace_norm};
