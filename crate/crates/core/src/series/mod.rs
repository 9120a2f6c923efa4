//! Accelerated infinite sums and the Taylor-head zero-sum lemma.

mod accel;
mod identities;
mod lemma;

pub use accel::{accelerated_sum, bilateral, Budget, SeriesKind, SeriesResult};
pub use identities::{identity_lhs, identity_rhs, SeriesIdentity};
pub use lemma::{
    catalog_zero_sum, lemma21_value, normalize_taylor, CatalogFunction, CatalogValue, TaylorHead,
};
