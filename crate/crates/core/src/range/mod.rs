//! The range criterion applied to the family: range layout, product-vector
//! families, partial complex conjugation, span growth, witness test and a
//! numerical product-vector search.

mod certify;
mod families;
mod pattern;
mod search;
mod span;

pub use certify::{certify, Certificate, Verdict, WITNESS_IN_RANGE_TOL, WITNESS_OUTSIDE_SPAN_TOL};
pub use families::{
    bilinear_residuals, instantiate, pcc, pcc_product, FamilyTag, FreeScalars, ProductVector,
    Scalar,
};
pub use pattern::{
    range_pattern_check, PatternCheck, RangeVectorPattern, FORCED_ZEROS, MIRRORED_PAIRS,
    PATTERN_TOL,
};
pub use search::{identify_family, product_search, HIT_TOL};
pub use span::{
    deterministic_scalars, family_span, family_vectors_in_range, pcc_span, PccSpan, Sampling,
    MEMBERSHIP_TOL,
};
