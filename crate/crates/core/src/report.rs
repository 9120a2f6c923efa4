//! Comparison records shared by the verifier and the check harness.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::series::SeriesResult;

/// Outcome of comparing two sides of an identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub wall_time: f64,
    pub notes: String,
}

impl IdentityReport {
    /// Builds a report; `abs_diff` and `pass` are derived from the two sides.
    pub fn new(
        name: impl Into<String>,
        params: BTreeMap<String, String>,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
        notes: impl Into<String>,
    ) -> Self {
        let abs_diff = (lhs - rhs).norm();
        Self {
            name: name.into(),
            params,
            lhs,
            rhs,
            abs_diff,
            tolerance,
            pass: abs_diff <= tolerance,
            wall_time: 0.0,
            notes: notes.into(),
        }
    }

    /// A non-passing report for a computation that could not complete.
    pub fn failure(
        name: impl Into<String>,
        params: BTreeMap<String, String>,
        tolerance: f64,
        notes: impl Into<String>,
    ) -> Self {
        let nan = Complex64::new(f64::NAN, f64::NAN);
        Self {
            name: name.into(),
            params,
            lhs: nan,
            rhs: nan,
            abs_diff: f64::NAN,
            tolerance,
            pass: false,
            wall_time: 0.0,
            notes: notes.into(),
        }
    }

    pub fn with_wall_time(mut self, seconds: f64) -> Self {
        self.wall_time = seconds;
        self
    }
}

/// Two sides of an identity before comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityPair {
    pub lhs: SeriesResult,
    pub rhs: Complex64,
    pub notes: Vec<String>,
}

impl IdentityPair {
    pub fn new(lhs: SeriesResult, rhs: Complex64) -> Self {
        Self {
            lhs,
            rhs,
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    /// `|lhs - rhs|`.
    pub fn abs_diff(&self) -> f64 {
        (self.lhs.value - self.rhs).norm()
    }

    pub fn into_report(
        self,
        name: impl Into<String>,
        params: BTreeMap<String, String>,
        tolerance: f64,
    ) -> IdentityReport {
        let mut notes = self.notes;
        notes.push(format!(
            "lhs error estimate {:.3e}",
            self.lhs.abs_err_estimate
        ));
        IdentityReport::new(
            name,
            params,
            self.lhs.value,
            self.rhs,
            tolerance,
            notes.join("; "),
        )
    }
}
