//! Partial transpose, realignment and the closed-form partial-transpose
//! spectrum of the family.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, hermitian_trace_norm, trace_norm, ComplexMatrix};
use crate::state::{DensityMatrix, FamilyParams};

/// `rho^T` counts as positive when its smallest eigenvalue is at least `-PPT_TOL`.
pub const PPT_TOL: f64 = 1e-10;

/// A trace norm must exceed `1 + DETECTION_TOL` to flag entanglement.
pub const DETECTION_TOL: f64 = 1e-9;

/// Relative slack for round-off in `S - sqrt(Delta1)`, which is
/// nonnegative in exact arithmetic.
const RADICAND_SLACK: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Partial transpose of an operator on `C^da (x) C^db`.
///
/// For the second subsystem, entry `((i,l),(k,j))` of the result is
/// `m((i,j),(k,l))`.
pub fn partial_transpose_matrix(
    m: &ComplexMatrix,
    dims: (usize, usize),
    sys: Subsystem,
) -> Result<ComplexMatrix> {
    let (da, db) = dims;
    if !m.is_square() || m.rows() != da * db {
        return Err(Error::BadDims {
            dims,
            size: m.rows(),
        });
    }
    let mut out = ComplexMatrix::zeros(m.rows(), m.cols());
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                for l in 0..db {
                    let v = m[(i * db + j, k * db + l)];
                    match sys {
                        Subsystem::Second => out[(i * db + l, k * db + j)] = v,
                        Subsystem::First => out[(k * db + j, i * db + l)] = v,
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn partial_transpose(rho: &DensityMatrix, sys: Subsystem) -> ComplexMatrix {
    partial_transpose_matrix(rho.matrix(), rho.dims(), sys)
        .expect("density matrix dims are consistent")
}

/// Reshuffled operator `R((i,k),(j,l)) = m((i,j),(k,l))`, of shape
/// `da^2 x db^2`.
pub fn realign(m: &ComplexMatrix, dims: (usize, usize)) -> Result<ComplexMatrix> {
    let (da, db) = dims;
    if !m.is_square() || m.rows() != da * db {
        return Err(Error::BadDims {
            dims,
            size: m.rows(),
        });
    }
    let mut out = ComplexMatrix::zeros(da * da, db * db);
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                for l in 0..db {
                    out[(i * da + k, j * db + l)] = m[(i * db + j, k * db + l)];
                }
            }
        }
    }
    Ok(out)
}

/// Inverse of [`realign`].
pub fn unrealign(r: &ComplexMatrix, dims: (usize, usize)) -> Result<ComplexMatrix> {
    let (da, db) = dims;
    if r.rows() != da * da || r.cols() != db * db {
        return Err(Error::BadDims {
            dims,
            size: r.rows(),
        });
    }
    let n = da * db;
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                for l in 0..db {
                    out[(i * db + j, k * db + l)] = r[(i * da + k, j * db + l)];
                }
            }
        }
    }
    Ok(out)
}

pub fn realignment(rho: &DensityMatrix) -> ComplexMatrix {
    realign(rho.matrix(), rho.dims()).expect("density matrix dims are consistent")
}

/// Numeric spectrum of `rho^{T_2}`, ascending.
pub fn pt_spectrum(rho: &DensityMatrix) -> Result<Vec<f64>> {
    hermitian_eigenvalues(&partial_transpose(rho, Subsystem::Second))
}

/// The intermediate quantities of the quartic block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticTerms {
    /// `|a|^4 + |b|^4 + |c|^4 + |d|^4`
    pub s: f64,
    /// `[(|a|^2-|d|^2)^2 + (|b|^2+|c|^2)^2] [(|a|^2+|d|^2)^2 + (|b|^2-|c|^2)^2]`
    pub delta1: f64,
}

impl QuarticTerms {
    pub fn from_norms([a, b, c, d]: [f64; 4]) -> Self {
        let s = a * a + b * b + c * c + d * d;
        let delta1 = ((a - d).powi(2) + (b + c).powi(2)) * ((a + d).powi(2) + (b - c).powi(2));
        Self { s, delta1 }
    }

    /// `(sqrt(2 [S + sqrt(Delta1)]), sqrt(2 [S - sqrt(Delta1)]))`
    fn radii(&self) -> Result<(f64, f64)> {
        let root = self.delta1.sqrt();
        let plus = self.s + root;
        let mut minus = self.s - root;
        if minus < 0.0 {
            if minus < -RADICAND_SLACK * self.s.max(f64::MIN_POSITIVE) {
                return Err(Error::NegativeRadicand(minus));
            }
            minus = 0.0;
        }
        Ok(((2.0 * plus).sqrt(), (2.0 * minus).sqrt()))
    }
}

/// The twelve eigenvalues of `rho^{T_2}` that come in closed form, as
/// `(value, multiplicity)`: four zeros and `eps |x|^2 / 2` twice for each of
/// `a, b, c, d`.
pub fn listed_pt_eigenvalues(params: &FamilyParams) -> Vec<(f64, usize)> {
    let half = params.eps / 2.0;
    let mut out = vec![(0.0, 4)];
    out.extend(params.norms_sq().iter().map(|n| (half * n, 2)));
    out
}

/// Roots of the quartic factor, ascending:
/// `(1-eps)/4 +/- (eps/4) sqrt(2 [S +/- sqrt(Delta1)])`.
pub fn quartic_pt_roots(params: &FamilyParams) -> Result<[f64; 4]> {
    params.validate()?;
    let terms = QuarticTerms::from_norms(params.norms_sq());
    let (outer, inner) = terms.radii()?;
    let center = (1.0 - params.eps) / 4.0;
    let q = params.eps / 4.0;
    let mut roots = [
        center - q * outer,
        center - q * inner,
        center + q * inner,
        center + q * outer,
    ];
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Largest `eps` for which the closed-form spectrum stays nonnegative:
/// `1 / (1 + K)` with `K = sqrt(2 [S + sqrt(Delta1)])`.
pub fn ppt_threshold(
    a: num_complex::Complex64,
    b: num_complex::Complex64,
    c: num_complex::Complex64,
    d: num_complex::Complex64,
) -> Result<f64> {
    let params = FamilyParams::new(a, b, c, d, 0.0)?;
    let (k, _) = QuarticTerms::from_norms(params.norms_sq()).radii()?;
    Ok(1.0 / (1.0 + k))
}

/// Closed-form description of the `rho^{T_2}` spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub eps: f64,
    pub listed: Vec<(f64, usize)>,
    pub quartic_roots: [f64; 4],
    pub s: f64,
    pub delta1: f64,
    pub min_eig: f64,
    pub is_ppt: bool,
    pub threshold: f64,
}

impl SpectrumReport {
    pub fn new(params: &FamilyParams) -> Result<Self> {
        let listed = listed_pt_eigenvalues(params);
        let quartic_roots = quartic_pt_roots(params)?;
        let terms = QuarticTerms::from_norms(params.norms_sq());
        let threshold = ppt_threshold(params.a, params.b, params.c, params.d)?;
        let min_eig = listed
            .iter()
            .map(|&(v, _)| v)
            .chain(quartic_roots)
            .fold(f64::INFINITY, f64::min);
        Ok(Self {
            eps: params.eps,
            listed,
            quartic_roots,
            s: terms.s,
            delta1: terms.delta1,
            min_eig,
            is_ppt: min_eig >= -PPT_TOL,
            threshold,
        })
    }

    /// All sixteen eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self
            .listed
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .chain(self.quartic_roots)
            .collect();
        all.sort_by(f64::total_cmp);
        all
    }
}

/// Trace norms of `rho^{T_2}` and of the realigned matrix, with the
/// detection flags of the two criteria.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionReport {
    pub pt_trace_norm: f64,
    pub ccnr_trace_norm: f64,
    pub min_pt_eig: f64,
    pub ppt_verdict: bool,
    pub pt_detects: bool,
    pub ccnr_detects: bool,
}

pub fn criterion_report(rho: &DensityMatrix) -> Result<CriterionReport> {
    let pt = partial_transpose(rho, Subsystem::Second);
    let spectrum = hermitian_eigenvalues(&pt)?;
    let min_pt_eig = spectrum.first().copied().unwrap_or(0.0);
    let pt_trace_norm = hermitian_trace_norm(&pt)?;
    let ccnr_trace_norm = trace_norm(&realignment(rho))?;
    Ok(CriterionReport {
        pt_trace_norm,
        ccnr_trace_norm,
        min_pt_eig,
        ppt_verdict: min_pt_eig >= -PPT_TOL,
        pt_detects: pt_trace_norm > 1.0 + DETECTION_TOL,
        ccnr_detects: ccnr_trace_norm > 1.0 + DETECTION_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{diag_separable, rho0, symmetric_instance};
    use num_complex::Complex64;

    #[test]
    fn diagonal_state_is_fixed_by_partial_transpose() {
        let d = diag_separable();
        assert_eq!(&partial_transpose(&d, Subsystem::Second), d.matrix());
        assert_eq!(&partial_transpose(&d, Subsystem::First), d.matrix());
    }

    #[test]
    fn partial_transpose_moves_pair_couplings_to_the_diagonal_block() {
        let rho = symmetric_instance(0.4).unwrap();
        let pt = partial_transpose(&rho, Subsystem::Second);
        // rho((1,2),(2,1)) -> rho^T2((1,1),(2,2)), i.e. 1-based (2,5) -> (1,6).
        assert_eq!(pt[(0, 5)], rho.matrix()[(1, 4)]);
        assert_eq!(pt[(1, 4)], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn boundary_and_npt_examples() {
        let at_half = pt_spectrum(&symmetric_instance(0.5).unwrap()).unwrap();
        assert!(at_half[0].abs() < 1e-10);
        let npt = pt_spectrum(&rho0(&FamilyParams::symmetric(1.0).unwrap()).unwrap()).unwrap();
        assert!(npt[0] < -0.2);
    }

    #[test]
    fn bad_dims() {
        assert!(matches!(
            partial_transpose_matrix(&ComplexMatrix::identity(15), (4, 4), Subsystem::Second),
            Err(Error::BadDims { .. })
        ));
        assert!(realign(&ComplexMatrix::identity(8), (4, 4)).is_err());
    }

    #[test]
    fn symmetric_quartic_roots() {
        for eps in [0.0, 0.2, 0.5, 0.9] {
            let roots = quartic_pt_roots(&FamilyParams::symmetric(eps).unwrap()).unwrap();
            let mut expected = [
                (1.0 - 2.0 * eps) / 4.0,
                (1.0 - eps) / 4.0,
                (1.0 - eps) / 4.0,
                0.25,
            ];
            expected.sort_by(f64::total_cmp);
            for (r, e) in roots.iter().zip(expected) {
                assert!((r - e).abs() < 1e-15, "eps={eps}: {roots:?}");
            }
        }
        let t = QuarticTerms::from_norms([0.25; 4]);
        assert_eq!((t.s, t.delta1), (0.25, 0.0625));
    }

    #[test]
    fn listed_eigenvalues_at_zero_and_symmetric() {
        let zero = listed_pt_eigenvalues(&FamilyParams::symmetric(0.0).unwrap());
        assert!(zero.iter().all(|&(v, _)| v == 0.0));
        assert_eq!(zero.iter().map(|&(_, m)| m).sum::<usize>(), 12);
        let sym = listed_pt_eigenvalues(&FamilyParams::symmetric(0.4).unwrap());
        assert_eq!(sym[0], (0.0, 4));
        assert!(sym[1..]
            .iter()
            .all(|&(v, m)| (v - 0.05).abs() < 1e-17 && m == 2));
    }

    #[test]
    fn threshold_for_symmetric_params_is_one_half() {
        let h = Complex64::new(0.5, 0.0);
        assert_eq!(ppt_threshold(h, h, h, h).unwrap(), 0.5);
    }

    #[test]
    fn negative_radicand_is_reported() {
        let t = QuarticTerms {
            s: 1.0,
            delta1: 1.1,
        };
        assert!(matches!(t.radii(), Err(Error::NegativeRadicand(_))));
        let t = QuarticTerms {
            s: 1.0,
            delta1: 1.0 + 1e-15,
        };
        assert_eq!(t.radii().unwrap().1, 0.0);
    }

    #[test]
    fn realignment_round_trip_and_mixed_state() {
        let rho = symmetric_instance(0.3).unwrap();
        let r = realignment(&rho);
        assert_eq!(&unrealign(&r, (4, 4)).unwrap(), rho.matrix());
        let mixed = DensityMatrix::maximally_mixed((4, 4));
        assert!((trace_norm(&realignment(&mixed)).unwrap() - 0.25).abs() < 1e-14);
    }

    #[test]
    fn report_for_diagonal_state() {
        let rep = criterion_report(&diag_separable()).unwrap();
        assert!(rep.pt_trace_norm <= 1.0 + 1e-12 && rep.ccnr_trace_norm <= 1.0 + 1e-12);
        assert!(rep.ppt_verdict && !rep.pt_detects && !rep.ccnr_detects);
    }
}
