//! Zeros of the target functions and the zero-sum identities built on them.

mod bracket;
mod digamma;
mod handle;
mod incomplete;
mod levels;
mod polygamma;
mod rect;
mod zeta;

pub use bracket::real_zero_bracketed;
pub use handle::{FunctionHandle, RecordKind, ZeroPoleRecord};
pub use rect::{
    boundary_winding, complex_zeros_in_rect, count_zeros_in_rect, count_zeros_nudged, ZeroScan,
};
pub mod targets;
pub use digamma::{digamma_identity, digamma_zero, digamma_zeros, DigammaIdentity};
pub use incomplete::{
    default_window, incomplete_algebraic, incomplete_enumeration, incomplete_identity_rhs,
    incomplete_zero_sums, IncompleteEnumeration, IncompleteIdentity, IncompleteSums,
};
pub use levels::{gamma_level_zeros, inverse_square_sum};
pub use polygamma::{
    polygamma_identity, polygamma_identity_rhs, polygamma_ladder, polygamma_zero_sum,
    polygamma_zeros, PolygammaBudget, PolygammaIdentity, PolygammaSum,
};
pub use zeta::{
    load_zeta_zeros, parse_zeta_zeros, zeta_density_tail, zeta_pair_term, zeta_zero_sum,
};
