//! The product vectors in the range of the family, from the case analysis
//! of `b (x) c` against the range layout.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::kron_vec;

/// Product-vector family label; the number is the conventional family index
/// used throughout the case analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    F12,
    F13,
    F14,
    F15,
    F16,
    F19,
    F22,
    F23,
    F24,
    F25,
    F26,
    F27,
}

impl FamilyTag {
    /// The eight families kept after removing linearly dependent pairs.
    pub const KEPT: [FamilyTag; 8] = [
        FamilyTag::F12,
        FamilyTag::F14,
        FamilyTag::F15,
        FamilyTag::F19,
        FamilyTag::F22,
        FamilyTag::F24,
        FamilyTag::F26,
        FamilyTag::F27,
    ];

    /// Opposite square-root branch of 12, 15, 22 and 24.
    pub const DISCARDED: [FamilyTag; 4] = [
        FamilyTag::F13,
        FamilyTag::F16,
        FamilyTag::F23,
        FamilyTag::F25,
    ];

    pub const ALL: [FamilyTag; 12] = [
        FamilyTag::F12,
        FamilyTag::F13,
        FamilyTag::F14,
        FamilyTag::F15,
        FamilyTag::F16,
        FamilyTag::F19,
        FamilyTag::F22,
        FamilyTag::F23,
        FamilyTag::F24,
        FamilyTag::F25,
        FamilyTag::F26,
        FamilyTag::F27,
    ];

    pub fn number(self) -> u8 {
        match self {
            FamilyTag::F12 => 12,
            FamilyTag::F13 => 13,
            FamilyTag::F14 => 14,
            FamilyTag::F15 => 15,
            FamilyTag::F16 => 16,
            FamilyTag::F19 => 19,
            FamilyTag::F22 => 22,
            FamilyTag::F23 => 23,
            FamilyTag::F24 => 24,
            FamilyTag::F25 => 25,
            FamilyTag::F26 => 26,
            FamilyTag::F27 => 27,
        }
    }

    /// Free scalars the family depends on.
    pub fn scalars(self) -> &'static [Scalar] {
        use Scalar::*;
        match self {
            FamilyTag::F12 | FamilyTag::F13 => &[A, D],
            FamilyTag::F14 => &[A],
            FamilyTag::F15 | FamilyTag::F16 => &[A, F],
            FamilyTag::F19 => &[D],
            FamilyTag::F22 | FamilyTag::F23 => &[D, H],
            FamilyTag::F24 | FamilyTag::F25 => &[F, H],
            FamilyTag::F26 => &[F],
            FamilyTag::F27 => &[H],
        }
    }

    /// For the two-scalar families: the pair of local indices `(p, q)` the
    /// vector lives on and whether the square root enters with the
    /// principal sign.
    fn two_scalar_layout(self) -> Option<(usize, usize, Scalar, Scalar, bool)> {
        use Scalar::*;
        match self {
            FamilyTag::F12 => Some((0, 1, A, D, true)),
            FamilyTag::F13 => Some((0, 1, A, D, false)),
            FamilyTag::F15 => Some((0, 2, A, F, true)),
            FamilyTag::F16 => Some((0, 2, A, F, false)),
            FamilyTag::F22 => Some((1, 3, D, H, true)),
            FamilyTag::F23 => Some((1, 3, D, H, false)),
            FamilyTag::F24 => Some((2, 3, F, H, true)),
            FamilyTag::F25 => Some((2, 3, F, H, false)),
            _ => None,
        }
    }

    fn one_scalar_layout(self) -> Option<(usize, Scalar)> {
        use Scalar::*;
        match self {
            FamilyTag::F14 => Some((0, A)),
            FamilyTag::F19 => Some((1, D)),
            FamilyTag::F26 => Some((2, F)),
            FamilyTag::F27 => Some((3, H)),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

/// Free scalars of the range layout that parametrize the families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scalar {
    A,
    D,
    F,
    H,
}

impl Scalar {
    pub fn name(self) -> &'static str {
        match self {
            Scalar::A => "A",
            Scalar::D => "D",
            Scalar::F => "F",
            Scalar::H => "H",
        }
    }
}

/// Values for the diagonal scalars `A, D, F, H` of the range layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeScalars {
    pub a: Complex64,
    pub d: Complex64,
    pub f: Complex64,
    pub h: Complex64,
}

impl FreeScalars {
    pub fn new(a: Complex64, d: Complex64, f: Complex64, h: Complex64) -> Self {
        Self { a, d, f, h }
    }

    pub fn splat(z: Complex64) -> Self {
        Self::new(z, z, z, z)
    }

    pub fn get(&self, s: Scalar) -> Complex64 {
        match s {
            Scalar::A => self.a,
            Scalar::D => self.d,
            Scalar::F => self.f,
            Scalar::H => self.h,
        }
    }
}

/// `left (x) right` with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductVector {
    pub left: [Complex64; 4],
    pub right: [Complex64; 4],
    pub family: Option<FamilyTag>,
    /// The scalars the family used, by name.
    pub scalars: Vec<(Scalar, Complex64)>,
}

impl ProductVector {
    pub fn new(left: [Complex64; 4], right: [Complex64; 4]) -> Self {
        Self {
            left,
            right,
            family: None,
            scalars: Vec::new(),
        }
    }

    pub fn vector(&self) -> Vec<Complex64> {
        kron_vec(&self.left, &self.right)
    }
}

/// Builds one member of a family.
///
/// Two-scalar families use the principal branch of `sqrt(-XY)`; the
/// discarded pairs take the opposite branch. The first scalar of a
/// two-scalar family divides the vector and must be nonzero.
pub fn instantiate(tag: FamilyTag, scalars: &FreeScalars) -> Result<ProductVector> {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut left = [z; 4];
    let mut right = [z; 4];
    if let Some((k, s)) = tag.one_scalar_layout() {
        left[k] = scalars.get(s);
        right[k] = one;
    } else if let Some((p, q, x, y, principal)) = tag.two_scalar_layout() {
        let xv = scalars.get(x);
        let yv = scalars.get(y);
        if xv == z {
            return Err(Error::DegenerateScalar(x.name()));
        }
        // `+ 0.0` turns a signed -0.0 imaginary part into +0.0 so the
        // principal branch of sqrt(-1) is i rather than -i.
        let w = -xv * yv;
        let root = Complex64::new(w.re, w.im + 0.0).sqrt();
        let root = if principal { root } else { -root };
        left[p] = one;
        left[q] = -root / xv;
        right[p] = xv;
        right[q] = root;
    }
    Ok(ProductVector {
        left,
        right,
        family: Some(tag),
        scalars: tag.scalars().iter().map(|&s| (s, scalars.get(s))).collect(),
    })
}

/// The five constraint groups on `b (x) c`: the largest of
/// `|b1 c4|, |b2 c3|, |b3 c2|, |b4 c1|`, then `|b1 c2 + b2 c1|`,
/// `|b1 c3 + b3 c1|`, `|b2 c4 + b4 c2|` and `|b3 c4 + b4 c3|`.
pub fn bilinear_residuals(pv: &ProductVector) -> [f64; 5] {
    let b = &pv.left;
    let c = &pv.right;
    let zeros = [b[0] * c[3], b[1] * c[2], b[2] * c[1], b[3] * c[0]]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    [
        zeros,
        (b[0] * c[1] + b[1] * c[0]).norm(),
        (b[0] * c[2] + b[2] * c[0]).norm(),
        (b[1] * c[3] + b[3] * c[1]).norm(),
        (b[2] * c[3] + b[3] * c[2]).norm(),
    ]
}

/// Partial complex conjugation `left (x) conj(right)`.
pub fn pcc(pv: &ProductVector) -> Vec<Complex64> {
    let right: Vec<Complex64> = pv.right.iter().map(|z| z.conj()).collect();
    kron_vec(&pv.left, &right)
}

/// Applies partial complex conjugation to the product vector itself.
pub fn pcc_product(pv: &ProductVector) -> ProductVector {
    ProductVector {
        right: pv.right.map(|z| z.conj()),
        ..pv.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one() -> Complex64 {
        c(1.0, 0.0)
    }

    #[test]
    fn family_14_is_e1_e1() {
        let pv = instantiate(FamilyTag::F14, &FreeScalars::splat(one())).unwrap();
        assert_eq!(pv.vector(), basis_vector(16, 0));
        assert_eq!(pv.scalars, vec![(Scalar::A, one())]);
    }

    #[test]
    fn family_27_is_e4_e4() {
        let pv = instantiate(FamilyTag::F27, &FreeScalars::splat(one())).unwrap();
        assert_eq!(pv.vector(), basis_vector(16, 15));
    }

    #[test]
    fn family_12_principal_branch() {
        let pv = instantiate(FamilyTag::F12, &FreeScalars::splat(one())).unwrap();
        assert_eq!(pv.left, [one(), c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(pv.right, [one(), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let v = pv.vector();
        // A=1, B=i, -B at position 5, D=1
        assert_eq!(v[0], one());
        assert_eq!(v[1], c(0.0, 1.0));
        assert_eq!(v[4], c(0.0, -1.0));
        assert!((v[5] - one()).norm() < 1e-15);
    }

    #[test]
    fn family_12_reproduces_range_entries() {
        let s = FreeScalars::new(c(0.3, -1.1), c(-0.7, 0.2), one(), one());
        let v = instantiate(FamilyTag::F12, &s).unwrap().vector();
        assert!((v[0] - s.a).norm() < 1e-15);
        assert!((v[5] - s.d).norm() < 1e-15);
        assert!((v[1] + v[4]).norm() < 1e-15);
        assert_eq!(v[2], c(0.0, 0.0));
    }

    #[test]
    fn degenerate_leading_scalar() {
        let s = FreeScalars::new(c(0.0, 0.0), one(), one(), one());
        assert_eq!(
            instantiate(FamilyTag::F12, &s),
            Err(Error::DegenerateScalar("A"))
        );
        assert_eq!(
            instantiate(FamilyTag::F15, &s),
            Err(Error::DegenerateScalar("A"))
        );
        assert!(instantiate(FamilyTag::F14, &s).is_ok());
    }

    #[test]
    fn residuals() {
        let e11 = instantiate(FamilyTag::F14, &FreeScalars::splat(one())).unwrap();
        assert_eq!(bilinear_residuals(&e11), [0.0; 5]);
        let f12 = instantiate(FamilyTag::F12, &FreeScalars::splat(one())).unwrap();
        assert!(bilinear_residuals(&f12).iter().all(|&r| r <= 1e-15));
        let e = |k: usize| {
            let mut v = [c(0.0, 0.0); 4];
            v[k] = one();
            v
        };
        let witness = ProductVector::new(e(0), e(1));
        let r = bilinear_residuals(&witness);
        assert_eq!(r[1], 1.0);
        assert_eq!(r[0], 0.0);
    }

    #[test]
    fn pcc_examples() {
        let real = instantiate(FamilyTag::F19, &FreeScalars::splat(c(2.0, 0.0))).unwrap();
        assert_eq!(pcc(&real), real.vector());
        let f12 = instantiate(FamilyTag::F12, &FreeScalars::splat(one())).unwrap();
        let expected = kron_vec(
            &[one(), c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)],
            &[one(), c(0.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)],
        );
        assert_eq!(pcc(&f12), expected);
        assert_eq!(pcc_product(&pcc_product(&f12)), f12);
    }
}
