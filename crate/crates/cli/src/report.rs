//! JSON reports printed by the `ppt`, `ccnr` and `certify` commands.

use boundent::ppt::{criterion_report, pt_spectrum, SpectrumReport};
use boundent::range::{certify, Certificate, Sampling};
use boundent::{CriterionReport, DensityMatrix, FamilyParams};
use serde::Serialize;

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ListedJson {
    pub value: f64,
    pub multiplicity: usize,
}

/// Partial-transpose spectrum. The closed-form fields are present only when
/// the family parameters are known.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumJson {
    pub eps: Option<f64>,
    pub listed: Option<Vec<ListedJson>>,
    pub quartic_roots: Option<[f64; 4]>,
    pub s: Option<f64>,
    pub delta1: Option<f64>,
    pub threshold: Option<f64>,
    /// Closed-form minimum when parameters are known, numeric otherwise.
    pub min_eig: f64,
    pub numeric_min_eig: f64,
    pub numeric_eigenvalues: Vec<f64>,
    pub is_ppt: bool,
}

impl SpectrumJson {
    pub fn build(rho: &DensityMatrix, params: Option<&FamilyParams>) -> Result<Self, CliError> {
        let numeric = pt_spectrum(rho)?;
        let numeric_min_eig = numeric[0];
        let closed = params.map(SpectrumReport::new).transpose()?;
        Ok(match closed {
            Some(rep) => Self {
                eps: Some(rep.eps),
                listed: Some(
                    rep.listed
                        .iter()
                        .map(|&(value, multiplicity)| ListedJson {
                            value,
                            multiplicity,
                        })
                        .collect(),
                ),
                quartic_roots: Some(rep.quartic_roots),
                s: Some(rep.s),
                delta1: Some(rep.delta1),
                threshold: Some(rep.threshold),
                min_eig: rep.min_eig,
                numeric_min_eig,
                numeric_eigenvalues: numeric,
                is_ppt: rep.is_ppt,
            },
            None => Self {
                eps: None,
                listed: None,
                quartic_roots: None,
                s: None,
                delta1: None,
                threshold: None,
                min_eig: numeric_min_eig,
                numeric_min_eig,
                numeric_eigenvalues: numeric,
                is_ppt: numeric_min_eig >= -boundent::ppt::PPT_TOL,
            },
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriterionJson {
    pub pt_trace_norm: f64,
    pub ccnr_trace_norm: f64,
    pub min_pt_eig: f64,
    pub ppt_verdict: bool,
    pub pt_detects: bool,
    pub ccnr_detects: bool,
}

impl From<CriterionReport> for CriterionJson {
    fn from(r: CriterionReport) -> Self {
        Self {
            pt_trace_norm: r.pt_trace_norm,
            ccnr_trace_norm: r.ccnr_trace_norm,
            min_pt_eig: r.min_pt_eig,
            ppt_verdict: r.ppt_verdict,
            pt_detects: r.pt_detects,
            ccnr_detects: r.ccnr_detects,
        }
    }
}

impl CriterionJson {
    pub fn build(rho: &DensityMatrix) -> Result<Self, CliError> {
        Ok(criterion_report(rho)?.into())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateJson {
    pub schema_version: &'static str,
    pub seed: u64,
    pub eps: f64,
    pub rank_rho: usize,
    pub rank_pt: usize,
    pub pcc_span_rank: usize,
    pub pattern_fits: bool,
    pub min_pt_eig: f64,
    pub is_ppt: bool,
    pub witness_in_range_pt: f64,
    pub witness_in_pcc_span: f64,
    pub pcc_span_outside_pt: f64,
    pub verdict: &'static str,
    pub spectrum: SpectrumJson,
    pub criteria: CriterionJson,
}

impl CertificateJson {
    pub fn from_parts(
        cert: &Certificate,
        seed: u64,
        spectrum: SpectrumJson,
        criteria: CriterionJson,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            seed,
            eps: cert.eps,
            rank_rho: cert.rank_rho,
            rank_pt: cert.rank_pt,
            pcc_span_rank: cert.pcc_span_rank,
            pattern_fits: cert.pattern_fits,
            min_pt_eig: cert.min_pt_eig,
            is_ppt: cert.is_ppt,
            witness_in_range_pt: cert.witness_in_range_pt,
            witness_in_pcc_span: cert.witness_in_pcc_span,
            pcc_span_outside_pt: cert.pcc_span_outside_pt,
            verdict: cert.verdict.as_str(),
            spectrum,
            criteria,
        }
    }

    pub fn build(params: &FamilyParams, sampling: &Sampling) -> Result<Self, CliError> {
        let rho = boundent::state::family_state(params)?;
        let cert = certify(params, sampling)?;
        Ok(Self::from_parts(
            &cert,
            sampling.seed,
            SpectrumJson::build(&rho, Some(params))?,
            CriterionJson::build(&rho)?,
        ))
    }
}
