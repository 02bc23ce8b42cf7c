//! The state family: coefficient-matrix pure states, the antisymmetric
//! standard forms, their mixtures and the one-parameter symmetric instance.
//!
//! Basis order throughout is `e1(x)e1, e1(x)e2, ..., e4(x)e4`, so the pure
//! state with coefficient matrix `A` has amplitude `A[i][j]` at `4 i + j`
//! (0-based).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};

/// Local dimension of each subsystem.
pub const LOCAL_DIM: usize = 4;
/// Dimension of the bipartite space.
pub const DIM: usize = LOCAL_DIM * LOCAL_DIM;

/// Tolerance on `|a|^2 + |b|^2 + |c|^2 + |d|^2 = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-10;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// 4x4 coefficient matrix `a_ij` of a bipartite pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffMatrix(ComplexMatrix);

impl CoeffMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if (m.rows(), m.cols()) != (LOCAL_DIM, LOCAL_DIM) {
            return Err(Error::DimensionMismatch {
                expected: LOCAL_DIM * LOCAL_DIM,
                got: m.rows() * m.cols(),
            });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn is_antisymmetric(&self) -> bool {
        let a = &self.0;
        (0..LOCAL_DIM).all(|i| (0..LOCAL_DIM).all(|j| a[(i, j)] == -a[(j, i)]))
    }

    /// Antisymmetric matrix with free entries `a, c, d, b1, c1`:
    ///
    /// ```text
    /// [  0   b1   a  -c  ]
    /// [ -b1  0    c   d  ]
    /// [ -a  -c    0  -c1 ]
    /// [  c  -d    c1  0  ]
    /// ```
    pub fn antisymmetric(
        a: Complex64,
        c: Complex64,
        d: Complex64,
        b1: Complex64,
        c1: Complex64,
    ) -> Self {
        let z = zero();
        let rows = [
            [z, b1, a, -c],
            [-b1, z, c, d],
            [-a, -c, z, -c1],
            [c, -d, c1, z],
        ];
        Self(ComplexMatrix::from_fn(LOCAL_DIM, LOCAL_DIM, |i, j| {
            rows[i][j]
        }))
    }

    /// Block standard form with `l1` coupling `e1,e2` and `l2` coupling `e3,e4`.
    pub fn standard_form_paired(l1: Complex64, l2: Complex64) -> Self {
        let mut m = ComplexMatrix::zeros(LOCAL_DIM, LOCAL_DIM);
        m[(0, 1)] = l1;
        m[(1, 0)] = -l1;
        m[(2, 3)] = l2;
        m[(3, 2)] = -l2;
        Self(m)
    }

    /// Standard form with `l1` coupling `e1,e3` and `l2` coupling `e2,e4`.
    pub fn standard_form_crossed(l1: Complex64, l2: Complex64) -> Self {
        let mut m = ComplexMatrix::zeros(LOCAL_DIM, LOCAL_DIM);
        m[(0, 2)] = l1;
        m[(2, 0)] = -l1;
        m[(1, 3)] = l2;
        m[(3, 1)] = -l2;
        Self(m)
    }
}

/// Amplitudes of a vector in `C^4 (x) C^4`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector16(pub [Complex64; DIM]);

impl StateVector16 {
    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        crate::linalg::norm(&self.0)
    }

    /// `|psi><psi|`
    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.0, &self.0)
    }
}

/// Vectorizes a coefficient matrix row by row.
pub fn pure_from_coeffs(a: &CoeffMatrix) -> StateVector16 {
    let mut v = [zero(); DIM];
    v.copy_from_slice(a.matrix().as_slice());
    StateVector16(v)
}

/// `|psi_{+b}>` (`sign = +1`) or `|psi_{-b}>` (`sign = -1`).
pub fn psi_b(sign: f64, b: Complex64, c: Complex64) -> StateVector16 {
    pure_from_coeffs(&CoeffMatrix::standard_form_paired(b * sign, -c))
}

/// `|psi_{+a}>` or `|psi_{-a}>`.
pub fn psi_a(sign: f64, a: Complex64, d: Complex64) -> StateVector16 {
    pure_from_coeffs(&CoeffMatrix::standard_form_crossed(a * sign, d))
}

fn even_mixture(p: &StateVector16, m: &StateVector16) -> ComplexMatrix {
    (&p.projector() + &m.projector()).scale_real(0.5)
}

/// Equal mixture of the projectors onto `|psi_{+b}>` and `|psi_{-b}>`.
/// Unnormalized: its trace is `2(|b|^2 + |c|^2)`.
pub fn rho_b(b: Complex64, c: Complex64) -> ComplexMatrix {
    even_mixture(&psi_b(1.0, b, c), &psi_b(-1.0, b, c))
}

/// Equal mixture of the projectors onto `|psi_{+a}>` and `|psi_{-a}>`.
pub fn rho_a(a: Complex64, d: Complex64) -> ComplexMatrix {
    even_mixture(&psi_a(1.0, a, d), &psi_a(-1.0, a, d))
}

/// Parameters `(a, b, c, d, eps)` of one member of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub eps: f64,
}

impl FamilyParams {
    /// Validates `0 <= eps <= 1` and `|a|^2+|b|^2+|c|^2+|d|^2 = 1`.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64, eps: f64) -> Result<Self> {
        let p = Self { a, b, c, d, eps };
        p.validate()?;
        Ok(p)
    }

    /// Rescales `a, b, c, d` onto the unit sphere before validating.
    pub fn normalized(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
        eps: f64,
    ) -> Result<Self> {
        let n = (a.norm_sqr() + b.norm_sqr() + c.norm_sqr() + d.norm_sqr()).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NormalizationViolated { sum: n * n });
        }
        Self::new(a / n, b / n, c / n, d / n, eps)
    }

    /// `a = b = c = d = 1/2`.
    pub fn symmetric(eps: f64) -> Result<Self> {
        let h = Complex64::new(0.5, 0.0);
        Self::new(h, h, h, h, eps)
    }

    pub fn with_eps(self, eps: f64) -> Result<Self> {
        Self::new(self.a, self.b, self.c, self.d, eps)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.a, self.b, self.c, self.d]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite || !self.eps.is_finite() {
            return Err(Error::NonFinite);
        }
        if !(0.0..=1.0).contains(&self.eps) {
            return Err(Error::EpsOutOfRange(self.eps));
        }
        let sum: f64 = self.norms_sq().iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NormalizationViolated { sum });
        }
        Ok(())
    }

    /// `[|a|^2, |b|^2, |c|^2, |d|^2]`
    pub fn norms_sq(&self) -> [f64; 4] {
        [
            self.a.norm_sqr(),
            self.b.norm_sqr(),
            self.c.norm_sqr(),
            self.d.norm_sqr(),
        ]
    }
}

/// A validated density matrix on a bipartite space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: (usize, usize),
}

impl DensityMatrix {
    /// Checks shape, Hermiticity (1e-12), unit trace (1e-12) and positivity
    /// (minimum eigenvalue >= -1e-10).
    pub fn new(matrix: ComplexMatrix, dims: (usize, usize)) -> Result<Self> {
        let size = dims.0 * dims.1;
        if !matrix.is_square() || matrix.rows() != size {
            return Err(Error::BadDims {
                dims,
                size: matrix.rows(),
            });
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let defect = matrix.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (defect {defect:e})"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensity(format!(
                "trace {} + {}i differs from 1",
                tr.re, tr.im
            )));
        }
        let min = hermitian_eig(&matrix)?.min();
        if min < -PSD_TOL {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(Self { matrix, dims })
    }

    /// Skips validation; for matrices that are states by construction.
    pub(crate) fn from_trusted(matrix: ComplexMatrix, dims: (usize, usize)) -> Self {
        debug_assert_eq!(matrix.rows(), dims.0 * dims.1);
        Self { matrix, dims }
    }

    /// Maximally mixed state `I / (da db)`.
    pub fn maximally_mixed(dims: (usize, usize)) -> Self {
        let n = dims.0 * dims.1;
        Self::from_trusted(ComplexMatrix::identity(n).scale_real(1.0 / n as f64), dims)
    }

    /// Normalized pure state `|psi><psi| / <psi|psi>`.
    pub fn pure(psi: &[Complex64], dims: (usize, usize)) -> Result<Self> {
        if psi.len() != dims.0 * dims.1 {
            return Err(Error::BadDims {
                dims,
                size: psi.len(),
            });
        }
        let u = crate::linalg::normalized(psi)?;
        Ok(Self::from_trusted(ComplexMatrix::outer(&u, &u), dims))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }
}

/// `rho_0 = (rho_a + rho_b) / 2`.
pub fn rho0(params: &FamilyParams) -> Result<DensityMatrix> {
    params.validate()?;
    let m = (&rho_a(params.a, params.d) + &rho_b(params.b, params.c)).scale_real(0.5);
    Ok(DensityMatrix::from_trusted(m, (LOCAL_DIM, LOCAL_DIM)))
}

/// `(1/4) sum_i |e_i e_i><e_i e_i|`, diagonal 1/4 at positions 1, 6, 11, 16.
pub fn diag_separable() -> DensityMatrix {
    let mut m = ComplexMatrix::zeros(DIM, DIM);
    for i in 0..LOCAL_DIM {
        let k = i * LOCAL_DIM + i;
        m[(k, k)] = Complex64::new(0.25, 0.0);
    }
    DensityMatrix::from_trusted(m, (LOCAL_DIM, LOCAL_DIM))
}

/// `(1 - eps) * diag_separable() + eps * rho_0`.
pub fn family_state(params: &FamilyParams) -> Result<DensityMatrix> {
    let r0 = rho0(params)?;
    let eps = params.eps;
    let m = &diag_separable().matrix.scale_real(1.0 - eps) + &r0.matrix.scale_real(eps);
    Ok(DensityMatrix::from_trusted(m, (LOCAL_DIM, LOCAL_DIM)))
}

/// The family member with `a = b = c = d = 1/2`.
pub fn symmetric_instance(eps: f64) -> Result<DensityMatrix> {
    family_state(&FamilyParams::symmetric(eps)?)
}
