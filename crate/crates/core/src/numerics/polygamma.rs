use num_complex::Complex64;

use super::{bernoulli_over_factorial, digamma, nonpositive_integer};
use crate::{Error, Result};

const SHIFT_RE: f64 = 10.0;
/// Recurrence shifts beyond this are refused.
const MAX_SHIFT: f64 = 1e6;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Asymptotic expansion of `psi^(n)` for large `|z|`, `n >= 1`.
fn asymptotic(n: u32, z: Complex64) -> Complex64 {
    let zi = z.inv();
    let zn = zi.powu(n);
    let mut acc = factorial(n - 1) * zn + 0.5 * factorial(n) * zn * zi;
    let zi2 = zi * zi;
    let mut p = zn * zi2;
    // (2k+n-1)!/(2k)! * B_2k / (2k)! ... kept as (2k+n-1)! * (B_2k/(2k)!)
    let mut rising = factorial(n + 1); // (2k+n-1)! for k = 1
    for k in 1..=40u32 {
        if k > 1 {
            rising *= f64::from(2 * k + n - 2) * f64::from(2 * k + n - 1);
        }
        let term = bernoulli_over_factorial(2 * k as usize) * rising * p;
        acc += term;
        if term.norm() <= 1e-17 * acc.norm() {
            break;
        }
        p *= zi2;
    }
    if n % 2 == 1 {
        acc
    } else {
        -acc
    }
}

/// Polygamma function `psi^(n)(z)`; `n = 0` is the digamma function.
pub fn polygamma(n: u32, z: Complex64) -> Result<Complex64> {
    if n == 0 {
        return digamma(z);
    }
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole(z));
    }
    if !(z.re > -MAX_SHIFT) {
        return Err(Error::Domain(format!(
            "Re z = {} below the recurrence range",
            z.re
        )));
    }
    let fact = factorial(n);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let threshold = SHIFT_RE + f64::from(n);
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < threshold {
        shift += w.inv().powu(n + 1);
        w += 1.0;
    }
    Ok(asymptotic(n, w) - sign * fact * shift)
}
