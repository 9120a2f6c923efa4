//! Riemann zeta zero ordinates and the sum of inverse squares over them.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;

use crate::series::SeriesResult;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Parses ordinates, one per line; blank lines and `#` comments are skipped.
pub fn parse_zeta_zeros(text: &str) -> Result<Vec<f64>> {
    let mut out: Vec<f64> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let t: f64 = s
            .parse()
            .map_err(|e: std::num::ParseFloatError| Error::Parse {
                line,
                message: e.to_string(),
            })?;
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Parse {
                line,
                message: format!("ordinate {s} is not a positive number"),
            });
        }
        if out.last().is_some_and(|&prev| t <= prev) {
            return Err(Error::NonMonotone { line });
        }
        out.push(t);
    }
    Ok(out)
}

/// Reads an ordinate file, see [`parse_zeta_zeros`].
pub fn load_zeta_zeros(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    parse_zeta_zeros(&std::fs::read_to_string(path)?)
}

/// `1/rho^2 + 1/conj(rho)^2` for `rho = 1/2 + it`.
pub fn zeta_pair_term(t: f64) -> f64 {
    let q = 0.25 + t * t;
    2.0 * (0.25 - t * t) / (q * q)
}

/// Density-model remainder `-(1/pi)(ln(T/2pi) + 1)/T` beyond ordinate `T`.
pub fn zeta_density_tail(t: f64) -> f64 {
    -((t / (2.0 * PI)).ln() + 1.0) / (PI * t)
}

/// `sum k/rho^2` over zeros `1/2 +- i t`.
///
/// With `include_tail`, the density remainder beyond the last ordinate is
/// added and its magnitude reported as the error estimate; otherwise the
/// estimate is zero.
pub fn zeta_zero_sum(ordinates: &[f64], include_tail: bool) -> Result<SeriesResult> {
    let last = *ordinates
        .last()
        .ok_or_else(|| Error::Precondition("no ordinates".into()))?;
    let s: CompensatedSum = ordinates
        .iter()
        .map(|&t| Complex64::new(zeta_pair_term(t), 0.0))
        .collect();
    let (tail, err) = if include_tail {
        let t = zeta_density_tail(last);
        (t, t.abs())
    } else {
        (0.0, 0.0)
    };
    Ok(SeriesResult {
        value: s.value() + tail,
        abs_err_estimate: err,
        terms_used: ordinates.len(),
    })
}
