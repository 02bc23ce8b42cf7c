use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{orthonormal_range, DEFAULT_RANK_TOL};
use crate::state::{DensityMatrix, DIM};

/// Deviation allowed when matching a vector against the range layout.
pub const PATTERN_TOL: f64 = 1e-10;

/// 0-based positions that are always zero in the range of the family.
pub const FORCED_ZEROS: [usize; 4] = [3, 6, 9, 12];

/// 0-based `(p, q)` pairs with `v[q] = -v[p]`.
pub const MIRRORED_PAIRS: [(usize, usize); 4] = [(1, 4), (2, 8), (7, 13), (11, 14)];

/// Vector of the form
/// `[A, B, C, 0, -B, D, 0, E, -C, 0, F, G, 0, -E, -G, H]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RangeVectorPattern {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub e: Complex64,
    pub f: Complex64,
    pub g: Complex64,
    pub h: Complex64,
}

impl RangeVectorPattern {
    pub fn materialize(&self) -> Vec<Complex64> {
        let z = Complex64::new(0.0, 0.0);
        vec![
            self.a, self.b, self.c, z, -self.b, self.d, z, self.e, -self.c, z, self.f, self.g, z,
            -self.e, -self.g, self.h,
        ]
    }

    /// Least-squares fit of `v` to the layout, together with the largest
    /// entrywise deviation of `v` from the fitted vector.
    pub fn fit(v: &[Complex64]) -> (Self, f64) {
        assert_eq!(v.len(), DIM);
        let pair = |p: usize, q: usize| (v[p] - v[q]) * 0.5;
        let pat = Self {
            a: v[0],
            b: pair(1, 4),
            c: pair(2, 8),
            d: v[5],
            e: pair(7, 13),
            f: v[10],
            g: pair(11, 14),
            h: v[15],
        };
        let dev = pat
            .materialize()
            .iter()
            .zip(v)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max);
        (pat, dev)
    }
}

/// Outcome of matching the range of a state against the layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternCheck {
    /// Every range basis vector matches the layout to `PATTERN_TOL`.
    pub fits: bool,
    /// Rank of the range.
    pub rank: usize,
    pub max_deviation: f64,
}

/// Checks that the range of `rho` sits inside the eight-dimensional space of
/// [`RangeVectorPattern`] vectors.
pub fn range_pattern_check(rho: &DensityMatrix) -> Result<PatternCheck> {
    let basis = orthonormal_range(rho.matrix(), DEFAULT_RANK_TOL)?;
    if rho.matrix().rows() != DIM {
        return Ok(PatternCheck {
            fits: false,
            rank: basis.rank(),
            max_deviation: f64::INFINITY,
        });
    }
    let max_deviation = basis
        .vectors
        .iter()
        .map(|v| RangeVectorPattern::fit(v).1)
        .fold(0.0, f64::max);
    Ok(PatternCheck {
        fits: max_deviation <= PATTERN_TOL && basis.rank() <= 8,
        rank: basis.rank(),
        max_deviation,
    })
}
