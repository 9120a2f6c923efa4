//! Check bodies: each reads its parameters and returns the two sides.

use littlewood::contour::RectRegion;
use littlewood::report::IdentityPair;
use littlewood::series::SeriesResult;
use littlewood::Complex64;

use crate::params::Params;

pub(crate) mod incomplete;
pub(crate) mod polygamma;
pub(crate) mod products;
pub(crate) mod series;
pub(crate) mod windows;

/// Both sides of a check before comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn new(lhs: Complex64, rhs: Complex64) -> Self {
        Self {
            lhs,
            rhs,
            notes: Vec::new(),
        }
    }

    pub fn series(lhs: SeriesResult, rhs: Complex64) -> Self {
        Self::new(lhs.value, rhs).note(format!(
            "{} terms, error estimate {:.3e}",
            lhs.terms_used, lhs.abs_err_estimate
        ))
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

impl From<IdentityPair> for Outcome {
    fn from(pair: IdentityPair) -> Self {
        let mut out = Outcome::new(pair.lhs.value, pair.rhs);
        out.notes = pair.notes;
        out.notes.push(format!(
            "lhs error estimate {:.3e}",
            pair.lhs.abs_err_estimate
        ));
        out
    }
}

pub(crate) type CheckFn = fn(&Params, f64) -> littlewood::Result<Outcome>;

pub(crate) fn rect(ps: &Params) -> littlewood::Result<RectRegion> {
    RectRegion::new(ps.real("x1"), ps.real("x2"), ps.real("y1"), ps.real("y2"))
}

pub(crate) fn square(half: f64) -> littlewood::Result<RectRegion> {
    RectRegion::new(-half, half, -half, half)
}

pub(crate) fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}
