//! `sweep`: one CSV row per grid point in eps.

use std::io::Write;

use boundent::ppt::{criterion_report, SpectrumReport};
use boundent::range::{certify, Sampling};
use boundent::state::family_state;
use boundent::FamilyParams;

use crate::CliError;

pub const HEADER: [&str; 5] = [
    "eps",
    "min_pt_eig",
    "pt_trace_norm",
    "ccnr_trace_norm",
    "verdict",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub eps: f64,
    pub min_pt_eig: f64,
    pub pt_trace_norm: f64,
    pub ccnr_trace_norm: f64,
    pub verdict: &'static str,
}

/// `steps` evenly spaced points from `start` to `end` inclusive.
pub fn grid(start: f64, end: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if steps == 0 {
        return Err(CliError::Input("steps must be at least 1".into()));
    }
    if !start.is_finite() || !end.is_finite() {
        return Err(CliError::Input("grid bounds must be finite".into()));
    }
    if steps == 1 {
        if start != end {
            return Err(CliError::Input(
                "a one-point grid needs start == end".into(),
            ));
        }
        return Ok(vec![start]);
    }
    if end < start {
        return Err(CliError::Input(format!(
            "grid end {end} is below start {start}"
        )));
    }
    let n = (steps - 1) as f64;
    let pts: Vec<f64> = (0..steps)
        .map(|k| start + (end - start) * k as f64 / n)
        .collect();
    if pts.iter().any(|e| !(0.0..=1.0).contains(e)) {
        return Err(CliError::Input(format!(
            "grid [{start}, {end}] leaves [0, 1]"
        )));
    }
    Ok(pts)
}

pub fn row(base: &FamilyParams, eps: f64, sampling: &Sampling) -> Result<SweepRow, CliError> {
    let params = base.with_eps(eps)?;
    let rho = family_state(&params)?;
    let spectrum = SpectrumReport::new(&params)?;
    let criteria = criterion_report(&rho)?;
    let cert = certify(&params, sampling)?;
    Ok(SweepRow {
        eps,
        min_pt_eig: spectrum.min_eig,
        pt_trace_norm: criteria.pt_trace_norm,
        ccnr_trace_norm: criteria.ccnr_trace_norm,
        verdict: cert.verdict.as_str(),
    })
}

pub fn run(
    base: &FamilyParams,
    grid: &[f64],
    sampling: &Sampling,
) -> Result<Vec<SweepRow>, CliError> {
    grid.iter().map(|&e| row(base, e, sampling)).collect()
}

/// `x` with 12 significant digits: fixed notation for moderate magnitudes,
/// scientific otherwise.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.11}", 0.0);
    }
    let sci = format!("{x:.11e}");
    // exponent after mantissa rounding, so 0.99999999999999 counts as 1e0
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record(HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            format_sig12(r.eps),
            format_sig12(r.min_pt_eig),
            format_sig12(r.pt_trace_norm),
            format_sig12(r.ccnr_trace_norm),
            r.verdict.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Input(e.to_string()))
}
