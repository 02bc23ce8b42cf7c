use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::families::{instantiate, pcc, FamilyTag, FreeScalars, ProductVector};
use super::pattern::FORCED_ZEROS;
use crate::error::{Error, Result};
use crate::linalg::{orthonormal_range, ComplexMatrix, RangeBasis, DEFAULT_RANK_TOL};
use crate::state::DIM;

/// Residual below which a family instantiation counts as lying in the range.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

/// How free scalars are sampled when growing a span of family vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampling {
    pub seed: u64,
    /// Random scalar tuples per batch.
    pub batch_size: usize,
    /// Stop after this many consecutive batches without rank growth.
    pub patience: usize,
    /// Hard cap on random batches.
    pub max_batches: usize,
    pub tol: f64,
}

impl Default for Sampling {
    fn default() -> Self {
        Self {
            seed: 0,
            batch_size: 16,
            patience: 10,
            max_batches: 1000,
            tol: DEFAULT_RANK_TOL,
        }
    }
}

impl Sampling {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

/// The deterministic scalar set `{1, -1, i, 1+i}`, taken for every scalar
/// independently (256 tuples).
pub fn deterministic_scalars() -> Vec<FreeScalars> {
    let set = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0, 1.0),
    ];
    let mut out = Vec::with_capacity(256);
    for a in set {
        for d in set {
            for f in set {
                for h in set {
                    out.push(FreeScalars::new(a, d, f, h));
                }
            }
        }
    }
    out
}

/// Instantiations of `tags` for every tuple in `scalars` that lie in
/// `range` (degenerate tuples are skipped).
pub fn family_vectors_in_range(
    tags: &[FamilyTag],
    scalars: &[FreeScalars],
    range: &RangeBasis,
) -> Result<Vec<ProductVector>> {
    let mut out = Vec::new();
    for s in scalars {
        for &tag in tags {
            let Ok(pv) = instantiate(tag, s) else {
                continue;
            };
            let v = pv.vector();
            if crate::linalg::norm(&v) == 0.0 {
                continue;
            }
            if range.relative_residual(&v)? <= MEMBERSHIP_TOL {
                out.push(pv);
            }
        }
    }
    Ok(out)
}

/// Span of partially conjugated family vectors.
#[derive(Debug, Clone)]
pub struct PccSpan {
    pub basis: RangeBasis,
    /// Number of product vectors accumulated.
    pub vectors_used: usize,
    /// Random batches drawn after the deterministic set.
    pub batches: usize,
}

/// Accumulates `|w><w|` for unit `w` and reads off the span.
struct SpanAccumulator {
    gram: ComplexMatrix,
    count: usize,
}

impl SpanAccumulator {
    fn new() -> Self {
        Self {
            gram: ComplexMatrix::zeros(DIM, DIM),
            count: 0,
        }
    }

    fn push(&mut self, v: &[Complex64]) {
        let Ok(u) = crate::linalg::normalized(v) else {
            return;
        };
        self.gram = &self.gram + &ComplexMatrix::outer(&u, &u);
        self.count += 1;
    }

    fn basis(&self, tol: f64) -> Result<RangeBasis> {
        orthonormal_range(&self.gram, tol)
    }
}

/// Orthonormal span of the partial complex conjugates of the kept families,
/// restricted to instantiations inside `range_rho`.
///
/// The deterministic scalar set is used first, then random complex batches
/// until the rank has not changed for `sampling.patience` batches.
pub fn pcc_span(range_rho: &RangeBasis, sampling: &Sampling) -> Result<PccSpan> {
    let tags = FamilyTag::KEPT;
    let bound = DIM - FORCED_ZEROS.len();
    let mut acc = SpanAccumulator::new();
    for pv in family_vectors_in_range(&tags, &deterministic_scalars(), range_rho)? {
        acc.push(&pcc(&pv));
    }
    let mut rank = acc.basis(sampling.tol)?.rank();

    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let mut stale = 0;
    let mut batches = 0;
    while stale < sampling.patience {
        if batches == sampling.max_batches {
            return Err(Error::NoStabilization { rank, bound });
        }
        batches += 1;
        let tuples: Vec<FreeScalars> = (0..sampling.batch_size)
            .map(|_| {
                FreeScalars::new(
                    complex_normal(&mut rng),
                    complex_normal(&mut rng),
                    complex_normal(&mut rng),
                    complex_normal(&mut rng),
                )
            })
            .collect();
        for pv in family_vectors_in_range(&tags, &tuples, range_rho)? {
            acc.push(&pcc(&pv));
        }
        let next = acc.basis(sampling.tol)?.rank();
        if next > bound {
            return Err(Error::NoStabilization { rank: next, bound });
        }
        if next == rank {
            stale += 1;
        } else {
            stale = 0;
            rank = next;
        }
    }
    Ok(PccSpan {
        basis: acc.basis(sampling.tol)?,
        vectors_used: acc.count,
        batches,
    })
}

/// Orthonormal span of the family vectors themselves (no conjugation).
pub fn family_span(
    tags: &[FamilyTag],
    scalars: &[FreeScalars],
    range_rho: &RangeBasis,
    tol: f64,
) -> Result<RangeBasis> {
    let mut acc = SpanAccumulator::new();
    for pv in family_vectors_in_range(tags, scalars, range_rho)? {
        acc.push(&pv.vector());
    }
    acc.basis(tol)
}

/// Standard complex normal draw (unit variance per component).
pub(crate) fn complex_normal(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}
