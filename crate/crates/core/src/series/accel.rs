use num_complex::Complex64;

use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Value of a truncated or accelerated sum together with its error model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub abs_err_estimate: f64,
    pub terms_used: usize,
}

impl SeriesResult {
    pub fn exact(value: Complex64, terms_used: usize) -> Self {
        Self {
            value,
            abs_err_estimate: 0.0,
            terms_used,
        }
    }
}

/// Decay model handed to [`accelerated_sum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesKind {
    /// Terms decay monotonically like `n^{-tail_power}`.
    MonotoneTail { tail_power: f64 },
    /// Terms alternate in sign with slowly varying magnitude.
    Alternating,
}

/// Term budget and extrapolation order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    pub terms: usize,
    pub order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            terms: 100_000,
            order: 4,
        }
    }
}

impl Budget {
    pub fn with_terms(terms: usize) -> Self {
        Self {
            terms,
            ..Self::default()
        }
    }
}

/// Richardson extrapolation of partial sums taken at `N_0 2^i`, eliminating
/// the tail exponents `p-1, p, p+1, ...`.
fn richardson(partials: &[(usize, Complex64)], tail_power: f64) -> (Complex64, f64) {
    let order = partials.len() - 1;
    let mut table: Vec<Complex64> = partials.iter().map(|p| p.1).collect();
    let mut diag = vec![table[order]];
    for j in 0..order {
        let q = tail_power - 1.0 + j as f64;
        let factor = 2f64.powf(q);
        for i in (j + 1..=order).rev() {
            table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0);
        }
        diag.push(table[order]);
    }
    let best = diag[order];
    let err = if order == 0 {
        f64::INFINITY
    } else {
        (diag[order] - diag[order - 1]).norm()
    };
    (best, err)
}

/// Sums `term(n)` for `n >= start` under the given decay model and budget.
pub fn accelerated_sum<F>(
    mut term: F,
    start: usize,
    kind: SeriesKind,
    budget: Budget,
) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Complex64,
{
    let result = match kind {
        SeriesKind::MonotoneTail { tail_power } => {
            let order = budget.order;
            let n0 = (budget.terms >> order).max(1);
            let mut acc = CompensatedSum::new();
            let mut partials = Vec::with_capacity(order + 1);
            let mut taken = 0;
            for i in 0..=order {
                let target = n0 << i;
                while taken < target {
                    acc.add(term(start + taken));
                    taken += 1;
                }
                partials.push((target, acc.value()));
            }
            let (value, err) = richardson(&partials, tail_power);
            SeriesResult {
                value,
                abs_err_estimate: err,
                terms_used: taken,
            }
        }
        SeriesKind::Alternating => {
            let levels = (2 * budget.order + 8).min(budget.terms.max(1));
            let total = budget.terms.max(levels + 1);
            let mut acc = CompensatedSum::new();
            let mut partials = Vec::with_capacity(levels + 1);
            for k in 0..total {
                acc.add(term(start + k));
                if k + levels + 1 >= total {
                    partials.push(acc.value());
                }
            }
            let mut prev = partials[partials.len() - 1];
            let mut row = partials;
            let mut err = f64::INFINITY;
            while row.len() > 1 {
                row = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
                let cur = row[row.len() - 1];
                err = (cur - prev).norm();
                prev = cur;
            }
            SeriesResult {
                value: prev,
                abs_err_estimate: err,
                terms_used: total,
            }
        }
    };
    if !result.value.re.is_finite() || !result.value.im.is_finite() {
        return Err(Error::Overflow("partial sums are not finite".into()));
    }
    let rounding = 16.0 * f64::EPSILON * result.value.norm();
    let result = SeriesResult {
        abs_err_estimate: result.abs_err_estimate.max(rounding),
        ..result
    };
    if result.abs_err_estimate > 1e-3 * result.value.norm().max(1.0) {
        return Err(Error::NonConvergence {
            terms: result.terms_used,
        });
    }
    Ok(result)
}

/// Pairs a bilateral summand by `|n|`: term `0` is `f(0)`, term `n` is `f(n) + f(-n)`.
pub fn bilateral<F>(mut f: F) -> impl FnMut(usize) -> Complex64
where
    F: FnMut(i64) -> Complex64,
{
    move |n| {
        if n == 0 {
            f(0)
        } else {
            let n = n as i64;
            f(n) + f(-n)
        }
    }
}
