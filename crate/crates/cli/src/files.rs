//! On-disk formats: state files and the complex-number encoding.

use std::fs;
use std::io::Write;
use std::path::Path;

use boundent::state::{family_state, DIM, LOCAL_DIM};
use boundent::{Complex64, ComplexMatrix, DensityMatrix, FamilyParams};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A complex number as `[re, im]`.
pub type JsonComplex = [f64; 2];

pub fn to_json_complex(z: Complex64) -> JsonComplex {
    [z.re, z.im]
}

pub fn from_json_complex(z: JsonComplex) -> Complex64 {
    Complex64::new(z[0], z[1])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub a: JsonComplex,
    pub b: JsonComplex,
    pub c: JsonComplex,
    pub d: JsonComplex,
    pub eps: f64,
}

impl From<&FamilyParams> for ParamsJson {
    fn from(p: &FamilyParams) -> Self {
        Self {
            a: to_json_complex(p.a),
            b: to_json_complex(p.b),
            c: to_json_complex(p.c),
            d: to_json_complex(p.d),
            eps: p.eps,
        }
    }
}

impl ParamsJson {
    pub fn to_params(&self) -> Result<FamilyParams, CliError> {
        Ok(FamilyParams::new(
            from_json_complex(self.a),
            from_json_complex(self.b),
            from_json_complex(self.c),
            from_json_complex(self.d),
            self.eps,
        )?)
    }
}

/// State file: bipartite dims, the row-major matrix of `[re, im]` pairs and
/// optionally the family parameters it was built from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: [usize; 2],
    pub matrix: Vec<Vec<JsonComplex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsJson>,
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix, params: Option<&FamilyParams>) -> Self {
        let m = rho.matrix();
        let matrix = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| to_json_complex(m[(i, j)])).collect())
            .collect();
        let (da, db) = rho.dims();
        Self {
            dims: [da, db],
            matrix,
            params: params.map(ParamsJson::from),
        }
    }

    /// Builds the family member and its state file.
    pub fn from_params(params: &FamilyParams) -> Result<Self, CliError> {
        Ok(Self::from_state(&family_state(params)?, Some(params)))
    }

    /// Validates the matrix as a density matrix on `C^4 (x) C^4`.
    pub fn to_density(&self) -> Result<DensityMatrix, CliError> {
        let dims = (self.dims[0], self.dims[1]);
        if dims != (LOCAL_DIM, LOCAL_DIM) {
            return Err(CliError::Input(format!(
                "dims must be [4, 4], got [{}, {}]",
                dims.0, dims.1
            )));
        }
        if self.matrix.len() != DIM || self.matrix.iter().any(|row| row.len() != DIM) {
            return Err(CliError::Input(
                "matrix must be 16 rows of 16 [re, im] pairs".into(),
            ));
        }
        let data = self
            .matrix
            .iter()
            .flatten()
            .copied()
            .map(from_json_complex)
            .collect();
        let m = ComplexMatrix::from_row_major(DIM, DIM, data)?;
        Ok(DensityMatrix::new(m, dims)?)
    }

    pub fn params(&self) -> Result<Option<FamilyParams>, CliError> {
        self.params.as_ref().map(ParamsJson::to_params).transpose()
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

/// Writes JSON to `out`, or to stdout when `out` is `None`.
pub fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    match out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(CliError::Input(e.to_string()))
                }
                _ => Ok(()),
            }
        }
    }
}

/// Parses `"re,im"` or a bare real number.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("invalid number {t:?}: {e}"))
    };
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(s)?, 0.0)),
    }
}
