//! Library side of the `boundent` command-line tool.

use std::fs::File;
use std::io;
use std::path::PathBuf;

use boundent::range::Sampling;
use boundent::state::family_state;
use boundent::{Complex64, DensityMatrix, FamilyParams};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub mod files;
pub mod report;
pub mod sweep;

pub use files::{parse_complex, StateFile};

/// Exit status 1 for bad input, 2 for numerical failures.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("numerical failure: {0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Numeric(_) => 2,
        }
    }
}

impl From<boundent::Error> for CliError {
    fn from(e: boundent::Error) -> Self {
        use boundent::Error::*;
        match e {
            NoConvergence { .. } | NoStabilization { .. } | NegativeRadicand(_) => {
                CliError::Numeric(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "boundent",
    version,
    about = "PPT, realignment and range-criterion analysis of a 4x4 state family"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family state and write it as JSON.
    State {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form and numeric spectrum of the partial transpose.
    Ppt {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace norms of the partial transpose and of the realigned matrix.
    Ccnr {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the range-criterion pipeline and print a certificate.
    Certify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an eps grid and write CSV.
    Sweep {
        start: f64,
        end: f64,
        steps: usize,
        #[arg(long = "a", value_parser = parse_complex, allow_hyphen_values = true)]
        a: Option<Complex64>,
        #[arg(long = "b", value_parser = parse_complex, allow_hyphen_values = true)]
        b: Option<Complex64>,
        #[arg(long = "c", value_parser = parse_complex, allow_hyphen_values = true)]
        c: Option<Complex64>,
        #[arg(long = "d", value_parser = parse_complex, allow_hyphen_values = true)]
        d: Option<Complex64>,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Family parameters; `a, b, c, d` default to 1/2 and are given as `re,im`.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub eps: f64,
    #[arg(long = "a", value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Option<Complex64>,
    #[arg(long = "b", value_parser = parse_complex, allow_hyphen_values = true)]
    pub b: Option<Complex64>,
    #[arg(long = "c", value_parser = parse_complex, allow_hyphen_values = true)]
    pub c: Option<Complex64>,
    #[arg(long = "d", value_parser = parse_complex, allow_hyphen_values = true)]
    pub d: Option<Complex64>,
}

/// Either family parameters or a state file.
#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    #[arg(long, allow_negative_numbers = true, conflicts_with = "input")]
    pub eps: Option<f64>,
    #[arg(long = "a", value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Option<Complex64>,
    #[arg(long = "b", value_parser = parse_complex, allow_hyphen_values = true)]
    pub b: Option<Complex64>,
    #[arg(long = "c", value_parser = parse_complex, allow_hyphen_values = true)]
    pub c: Option<Complex64>,
    #[arg(long = "d", value_parser = parse_complex, allow_hyphen_values = true)]
    pub d: Option<Complex64>,
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Relative rank cutoff for ranges and spans.
    #[arg(long, default_value_t = boundent::linalg::DEFAULT_RANK_TOL)]
    pub tol: f64,
}

impl RunArgs {
    pub fn sampling(&self) -> Result<Sampling, CliError> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(CliError::Input(format!(
                "--tol must lie in (0, 1), got {}",
                self.tol
            )));
        }
        Ok(Sampling {
            seed: self.seed,
            tol: self.tol,
            ..Sampling::default()
        })
    }
}

fn half() -> Complex64 {
    Complex64::new(0.5, 0.0)
}

pub fn family_params(
    eps: f64,
    a: Option<Complex64>,
    b: Option<Complex64>,
    c: Option<Complex64>,
    d: Option<Complex64>,
) -> Result<FamilyParams, CliError> {
    Ok(FamilyParams::new(
        a.unwrap_or_else(half),
        b.unwrap_or_else(half),
        c.unwrap_or_else(half),
        d.unwrap_or_else(half),
        eps,
    )?)
}

impl ParamArgs {
    pub fn to_params(&self) -> Result<FamilyParams, CliError> {
        family_params(self.eps, self.a, self.b, self.c, self.d)
    }
}

impl SourceArgs {
    /// The state and, when known, its parameters.
    pub fn resolve(&self) -> Result<(DensityMatrix, Option<FamilyParams>), CliError> {
        match (&self.input, self.eps) {
            (Some(path), _) => {
                let file = StateFile::load(path)?;
                Ok((file.to_density()?, file.params()?))
            }
            (None, Some(eps)) => {
                let params = family_params(eps, self.a, self.b, self.c, self.d)?;
                Ok((family_state(&params)?, Some(params)))
            }
            (None, None) => Err(CliError::Input("either --eps or --in is required".into())),
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::State { params, out } => {
            let p = params.to_params()?;
            files::write_json(&StateFile::from_params(&p)?, out.as_deref())
        }
        Command::Ppt { source, out } => {
            let (rho, params) = source.resolve()?;
            files::write_json(
                &report::SpectrumJson::build(&rho, params.as_ref())?,
                out.as_deref(),
            )
        }
        Command::Ccnr { source, out } => {
            let (rho, _) = source.resolve()?;
            files::write_json(&report::CriterionJson::build(&rho)?, out.as_deref())
        }
        Command::Certify { source, run, out } => {
            let (_, params) = source.resolve()?;
            let params =
                params.ok_or_else(|| CliError::Input("certify needs family parameters".into()))?;
            let cert = report::CertificateJson::build(&params, &run.sampling()?)?;
            files::write_json(&cert, out.as_deref())
        }
        Command::Sweep {
            start,
            end,
            steps,
            a,
            b,
            c,
            d,
            run,
            out,
        } => {
            let grid = sweep::grid(start, end, steps)?;
            let base = family_params(grid[0], a, b, c, d)?;
            let rows = sweep::run(&base, &grid, &run.sampling()?)?;
            match out {
                Some(path) => {
                    let f = File::create(&path)
                        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                    sweep::write_csv(&rows, f)
                }
                None => sweep::write_csv(&rows, io::stdout()),
            }
        }
    }
}
