use num_complex::Complex64;

use super::eig::hermitian_eig;
use super::matrix::{inner, norm, normalized, ComplexMatrix};
use crate::error::{Error, Result};

/// Default relative rank cutoff for ranges and spans.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// Orthonormal basis of a subspace of `C^dim`.
#[derive(Debug, Clone)]
pub struct RangeBasis {
    pub dim: usize,
    pub vectors: Vec<Vec<Complex64>>,
    /// Relative eigenvalue cutoff used to decide the rank.
    pub tol: f64,
}

impl RangeBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for q in &self.vectors {
            let coeff = inner(q, v);
            for (o, qi) in out.iter_mut().zip(q) {
                *o += qi * coeff;
            }
        }
        out
    }

    /// `||v - P v|| / ||v||`.
    pub fn relative_residual(&self, v: &[Complex64]) -> Result<f64> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let nv = norm(v);
        if nv == 0.0 {
            return Err(Error::ZeroVector);
        }
        let p = self.project(v);
        let r: Vec<Complex64> = v.iter().zip(&p).map(|(a, b)| a - b).collect();
        Ok(norm(&r) / nv)
    }

    pub fn projector(&self) -> ComplexMatrix {
        let mut p = ComplexMatrix::zeros(self.dim, self.dim);
        for q in &self.vectors {
            p = &p + &ComplexMatrix::outer(q, q);
        }
        p
    }

    /// Largest `|<v_i, v_j> - delta_ij|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, u) in self.vectors.iter().enumerate() {
            for (j, w) in self.vectors.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((inner(u, w) - target).norm());
            }
        }
        worst
    }
}

/// Eigenvectors of a Hermitian PSD matrix whose eigenvalues exceed
/// `tol * max(1, lambda_max)`.
pub fn orthonormal_range(m: &ComplexMatrix, tol: f64) -> Result<RangeBasis> {
    let eig = hermitian_eig(m)?;
    let cutoff = tol * eig.max().max(1.0);
    let vectors = eig
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &l)| l > cutoff)
        .map(|(k, _)| eig.eigenvector(k))
        .collect();
    Ok(RangeBasis {
        dim: m.rows(),
        vectors,
        tol,
    })
}

/// Membership test; returns `(residual <= tol, residual)`.
pub fn subspace_contains(basis: &RangeBasis, v: &[Complex64], tol: f64) -> Result<(bool, f64)> {
    let r = basis.relative_residual(v)?;
    Ok((r <= tol, r))
}

/// Orthonormal basis of the linear span of `vectors`.
///
/// Inputs are normalized (zero vectors dropped) and the basis is taken from
/// the range of `sum_k |v_k><v_k|`, which does not depend on input order.
pub fn span_of(vectors: &[Vec<Complex64>], dim: usize, tol: f64) -> Result<RangeBasis> {
    let mut gram = ComplexMatrix::zeros(dim, dim);
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        let Ok(u) = normalized(v) else { continue };
        for i in 0..dim {
            if u[i] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..dim {
                gram[(i, j)] += u[i] * u[j].conj();
            }
        }
    }
    orthonormal_range(&gram, tol)
}
