use std::fmt;

use super::pattern::range_pattern_check;
use super::span::{pcc_span, Sampling};
use crate::error::Result;
use crate::linalg::{basis_vector, hermitian_eigenvalues, orthonormal_range, DEFAULT_RANK_TOL};
use crate::ppt::{partial_transpose, Subsystem, PPT_TOL};
use crate::state::{family_state, FamilyParams, DIM};

/// The witness must lie in `range(rho^{T_2})` up to this residual.
pub const WITNESS_IN_RANGE_TOL: f64 = 1e-10;
/// The witness must be at least this far from the PCC span.
pub const WITNESS_OUTSIDE_SPAN_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    BoundEntangled,
    Npt,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::BoundEntangled => "bound_entangled",
            Verdict::Npt => "npt",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of the range-criterion pipeline for one state.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub eps: f64,
    pub rank_rho: usize,
    pub rank_pt: usize,
    pub pcc_span_rank: usize,
    pub pattern_fits: bool,
    pub min_pt_eig: f64,
    pub is_ppt: bool,
    /// Residual of `e1 (x) e2` against `range(rho^{T_2})`.
    pub witness_in_range_pt: f64,
    /// Residual of `e1 (x) e2` against the PCC span.
    pub witness_in_pcc_span: f64,
    /// Largest residual of a PCC span basis vector against `range(rho^{T_2})`.
    pub pcc_span_outside_pt: f64,
    pub verdict: Verdict,
}

/// Runs the PPT test, the range layout check and the witness test.
///
/// `BoundEntangled` requires PPT, the witness inside `range(rho^{T_2})` and
/// outside the PCC span; `Npt` is reported when the smallest eigenvalue of
/// `rho^{T_2}` is below `-1e-10`; anything else is `Inconclusive`.
pub fn certify(params: &FamilyParams, sampling: &Sampling) -> Result<Certificate> {
    let rho = family_state(params)?;
    let pt = partial_transpose(&rho, Subsystem::Second);
    let min_pt_eig = hermitian_eigenvalues(&pt)?[0];
    let is_ppt = min_pt_eig >= -PPT_TOL;

    let range_rho = orthonormal_range(rho.matrix(), sampling.tol)?;
    let range_pt = orthonormal_range(&pt, DEFAULT_RANK_TOL.max(sampling.tol))?;
    let pattern = range_pattern_check(&rho)?;
    let span = pcc_span(&range_rho, sampling)?;

    let witness = basis_vector(DIM, 1);
    let witness_in_range_pt = range_pt.relative_residual(&witness)?;
    let witness_in_pcc_span = span.basis.relative_residual(&witness)?;
    let pcc_span_outside_pt = span
        .basis
        .vectors
        .iter()
        .map(|v| range_pt.relative_residual(v))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);

    let verdict = if !is_ppt {
        Verdict::Npt
    } else if witness_in_range_pt <= WITNESS_IN_RANGE_TOL
        && witness_in_pcc_span >= WITNESS_OUTSIDE_SPAN_TOL
    {
        Verdict::BoundEntangled
    } else {
        Verdict::Inconclusive
    };

    Ok(Certificate {
        eps: params.eps,
        rank_rho: range_rho.rank(),
        rank_pt: range_pt.rank(),
        pcc_span_rank: span.basis.rank(),
        pattern_fits: pattern.fits,
        min_pt_eig,
        is_ppt,
        witness_in_range_pt,
        witness_in_pcc_span,
        pcc_span_outside_pt,
        verdict,
    })
}
