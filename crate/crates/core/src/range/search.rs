//! Numerical search for product vectors in a subspace of `C^4 (x) C^4`,
//! used as an independent check on the enumerated families.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::families::{instantiate, FamilyTag, FreeScalars, ProductVector};
use super::span::complex_normal;
use crate::linalg::{hermitian_eig, inner, kron_vec, normalized, ComplexMatrix, RangeBasis};
use crate::state::LOCAL_DIM;

/// A candidate is accepted when `||(1-P)(b (x) c)|| / ||b (x) c||` is at most this.
pub const HIT_TOL: f64 = 1e-8;

const MAX_ITERS: usize = 5000;
const CONVERGED: f64 = 1e-12;
const STALL_RATIO: f64 = 1e-3;
const STALL_ITERS: usize = 50;

/// `M[k][l] = sum_ij conj(b_i) P[(i,k),(j,l)] b_j`: the compression of `P`
/// onto `b (x) C^4`.
fn compress_right(p: &ComplexMatrix, b: &[Complex64]) -> ComplexMatrix {
    let n = LOCAL_DIM;
    ComplexMatrix::from_fn(n, n, |k, l| {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                s += b[i].conj() * p[(i * n + k, j * n + l)] * b[j];
            }
        }
        s
    })
}

/// `M[i][j] = sum_kl conj(c_k) P[(i,k),(j,l)] c_l`.
fn compress_left(p: &ComplexMatrix, c: &[Complex64]) -> ComplexMatrix {
    let n = LOCAL_DIM;
    ComplexMatrix::from_fn(n, n, |i, j| {
        let mut s = Complex64::new(0.0, 0.0);
        for k in 0..n {
            for l in 0..n {
                s += c[k].conj() * p[(i * n + k, j * n + l)] * c[l];
            }
        }
        s
    })
}

fn top_eigenvector(m: &ComplexMatrix) -> Option<(f64, Vec<Complex64>)> {
    let e = hermitian_eig(m).ok()?;
    let k = e.eigenvalues.len() - 1;
    Some((e.eigenvalues[k], e.eigenvector(k)))
}

fn random_unit(rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..LOCAL_DIM).map(|_| complex_normal(rng)).collect();
        if let Ok(u) = normalized(&v) {
            return u;
        }
    }
}

/// Alternating maximization of `||P (b (x) c)||` over unit `b, c`.
///
/// Each half step is a 4x4 Hermitian top-eigenvector problem. Restarts draw
/// a fresh random `b` from one ChaCha stream seeded with `seed`, so the
/// result is deterministic. Only candidates whose relative distance to the
/// subspace is at most [`HIT_TOL`] are returned.
pub fn product_search(basis: &RangeBasis, restarts: usize, seed: u64) -> Vec<ProductVector> {
    assert_eq!(
        basis.dim,
        LOCAL_DIM * LOCAL_DIM,
        "product search needs a subspace of C^16"
    );
    let p = basis.projector();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = Vec::new();
    for _ in 0..restarts {
        let mut b = random_unit(&mut rng);
        let mut c = vec![Complex64::new(0.0, 0.0); LOCAL_DIM];
        let mut best = f64::INFINITY;
        let mut stale = 0;
        for _ in 0..MAX_ITERS {
            let Some((_, next_c)) = top_eigenvector(&compress_right(&p, &b)) else {
                break;
            };
            c = next_c;
            let Some((_, next_b)) = top_eigenvector(&compress_left(&p, &c)) else {
                break;
            };
            b = next_b;
            let Ok(r) = basis.relative_residual(&kron_vec(&b, &c)) else {
                break;
            };
            if r <= CONVERGED {
                break;
            }
            if r < best * (1.0 - STALL_RATIO) {
                best = r;
                stale = 0;
            } else {
                stale += 1;
                if stale == STALL_ITERS {
                    break;
                }
            }
        }
        let v = kron_vec(&b, &c);
        let Ok(r) = basis.relative_residual(&v) else {
            continue;
        };
        if r <= HIT_TOL {
            let mut left = [Complex64::new(0.0, 0.0); LOCAL_DIM];
            let mut right = left;
            left.copy_from_slice(&b);
            right.copy_from_slice(&c);
            hits.push(ProductVector::new(left, right));
        }
    }
    hits
}

/// `min_phi || u - e^{i phi} v ||` for unit `u, v`.
fn phase_distance(u: &[Complex64], v: &[Complex64]) -> f64 {
    let ov = inner(u, v).norm();
    (2.0 - 2.0 * ov).max(0.0).sqrt()
}

/// Matches a vector against the families, reading the free scalars off the
/// diagonal positions of `v`.
///
/// One-scalar families are tried first, then the kept two-scalar families,
/// then their opposite-branch pairs; the first one within `tol` (distance
/// between unit vectors, up to phase) is returned.
pub fn identify_family(v: &[Complex64], tol: f64) -> Option<(FamilyTag, f64)> {
    use FamilyTag::*;
    const ORDER: [FamilyTag; 12] = [F14, F19, F26, F27, F12, F15, F22, F24, F13, F16, F23, F25];
    let u = normalized(v).ok()?;
    let scalars = FreeScalars::new(u[0], u[5], u[10], u[15]);
    ORDER.into_iter().find_map(|tag| {
        let w = instantiate(tag, &scalars).ok()?.vector();
        let w = normalized(&w).ok()?;
        let dist = phase_distance(&u, &w);
        (dist <= tol).then_some((tag, dist))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{basis_vector, span_of, DEFAULT_RANK_TOL};

    #[test]
    fn recovers_single_product_vector() {
        let basis = span_of(&[basis_vector(16, 0)], 16, DEFAULT_RANK_TOL).unwrap();
        let hits = product_search(&basis, 5, 1);
        assert_eq!(hits.len(), 5);
        for h in hits {
            let (tag, d) = identify_family(&h.vector(), 1e-6).unwrap();
            assert_eq!(tag, FamilyTag::F14);
            assert!(d < 1e-6);
        }
    }

    #[test]
    fn antisymmetric_vector_has_no_product_hits() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = vec![Complex64::new(0.0, 0.0); 16];
        v[1] = Complex64::new(s, 0.0);
        v[4] = Complex64::new(-s, 0.0);
        let basis = span_of(&[v], 16, DEFAULT_RANK_TOL).unwrap();
        assert!(product_search(&basis, 50, 3).is_empty());
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let basis = span_of(
            &[basis_vector(16, 0), basis_vector(16, 5)],
            16,
            DEFAULT_RANK_TOL,
        )
        .unwrap();
        assert_eq!(product_search(&basis, 20, 9), product_search(&basis, 20, 9));
    }

    #[test]
    fn identifies_the_witness_as_foreign() {
        // e1 (x) e2 is a product vector, but no family of the range produces it.
        assert!(identify_family(&basis_vector(16, 1), 1e-6).is_none());
    }
}
