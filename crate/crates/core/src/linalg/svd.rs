use super::eig::hermitian_eig;
use super::matrix::ComplexMatrix;
use crate::error::Result;

/// Singular values in descending order.
///
/// The values are read off the Hermitian eigenvalues of the Jordan-Wielandt
/// matrix `[[0, M], [M^dag, 0]]`, whose spectrum is `{+s_i, -s_i}` padded
/// with zeros. Unlike `sqrt(eig(M^dag M))` this keeps small singular values
/// at absolute accuracy instead of the square root of it.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let (r, c) = (m.rows(), m.cols());
    let k = r.min(c);
    if k == 0 {
        return Ok(Vec::new());
    }
    let n = r + c;
    let mut jw = ComplexMatrix::zeros(n, n);
    for i in 0..r {
        for j in 0..c {
            let z = m[(i, j)];
            jw[(i, r + j)] = z;
            jw[(r + j, i)] = z.conj();
        }
    }
    let eig = hermitian_eig(&jw)?;
    let mut values: Vec<f64> = eig
        .eigenvalues
        .iter()
        .rev()
        .take(k)
        .map(|s| s.abs())
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Sum of singular values.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(m)?.iter().sum())
}

/// Trace norm of a Hermitian matrix as the sum of absolute eigenvalues.
pub fn hermitian_trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eig(m)?.eigenvalues.iter().map(|l| l.abs()).sum())
}

/// Spectral (operator 2-) norm.
pub fn spectral_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(m)?.first().copied().unwrap_or(0.0))
}
