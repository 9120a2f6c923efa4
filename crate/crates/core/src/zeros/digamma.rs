//! Real zeros of the digamma function and the paired sums over them.

use num_complex::Complex64;

use super::bracket::real_zero_bracketed;
use crate::numerics::{digamma, euler_gamma, harmonic, polygamma, zeta_int};
use crate::report::IdentityPair;
use crate::series::SeriesResult;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

const EPS: f64 = 1e-6;

fn psi(x: f64) -> f64 {
    digamma(Complex64::new(x, 0.0))
        .map(|v| v.re)
        .unwrap_or(f64::NAN)
}

/// The zero of `psi` in `(-n, -n + 1)`, or the positive zero for `n = 0`.
pub fn digamma_zero(n: u64) -> Result<f64> {
    let (lo, hi) = if n == 0 {
        (EPS, 2.0)
    } else {
        (-(n as f64) + EPS, -(n as f64) + 1.0 - EPS)
    };
    real_zero_bracketed(psi, lo, hi, 1e-15)
}

/// `rho_0 > rho_1 > ... > rho_count`, one zero per bracket between poles.
pub fn digamma_zeros(count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::Precondition("count must be at least 1".into()));
    }
    (0..=count as u64).map(digamma_zero).collect()
}

/// Closed-form targets built on digamma zeros.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DigammaIdentity {
    /// `1/rho_0 + sum (1/rho_n + 1/n) = -gamma`.
    Eq42,
    /// `ln N + sum_{n<=N} 1/rho_n`, with its limit.
    Eq43Limit,
    /// Paired sum against `-psi'(p)/psi(p)`.
    Eq44 { p: f64 },
    /// Paired sum against `H_k - gamma`.
    Eq45 { k: u64 },
    /// Paired sum against `-psi''(rho_k) / (2 psi'(rho_k))`.
    Eq46 { k: u64 },
    /// `sum 1/rho_n^2 = gamma^2 + pi^2/2`.
    SumRhoSq,
}

/// `sum_{n>N} 1/(n^2 ln n)`, the shape of every paired ladder remainder.
fn paired_tail(n: usize) -> f64 {
    let x = n as f64 + 0.5;
    1.0 / (x * x.ln())
}

/// `sum_{n>N} 1/n^2` by Euler-Maclaurin.
fn inverse_square_tail(n: usize) -> f64 {
    let x = n as f64;
    1.0 / x - 1.0 / (2.0 * x * x) + 1.0 / (6.0 * x * x * x)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// LHS over `count` ladder zeros and the closed-form RHS.
///
/// Paired sums carry the remainder model `-sum_{n>N} 1/(n^2 ln n)`, applied to
/// the value and reported as the error estimate.
pub fn digamma_identity(id: DigammaIdentity, count: usize) -> Result<IdentityPair> {
    let rho = digamma_zeros(count)?;
    let n_max = count;
    let g = euler_gamma();
    let paired = |value: f64, label: &str| {
        let tail = -paired_tail(n_max);
        IdentityPair::new(
            SeriesResult {
                value: real(value + tail),
                abs_err_estimate: tail.abs(),
                terms_used: n_max + 1,
            },
            real(0.0),
        )
        .note(format!(
            "{label}; ladder tail {tail:.3e} applied over {n_max} zeros"
        ))
    };
    match id {
        DigammaIdentity::Eq42 => {
            let mut s = CompensatedSum::new();
            s.add(real(1.0 / rho[0]));
            for (n, r) in rho.iter().enumerate().skip(1) {
                s.add(real(1.0 / r + 1.0 / n as f64));
            }
            let mut pair = paired(s.value().re, "1/rho_0 + sum (1/rho_n + 1/n)");
            pair.rhs = real(-g);
            Ok(pair)
        }
        DigammaIdentity::Eq43Limit => {
            let s: f64 = rho.iter().map(|r| 1.0 / r).sum();
            let n = n_max as f64;
            let value = n.ln() + s;
            Ok(IdentityPair::new(
                SeriesResult {
                    value: real(value),
                    abs_err_estimate: 1.0 / (2.0 * n) + paired_tail(n_max),
                    terms_used: n_max + 1,
                },
                real(-2.0 * g),
            )
            .note("limit is -2 gamma; the printed 0 follows from gamma = lim (ln N - H_N)"))
        }
        DigammaIdentity::Eq44 { p } => {
            let pv = psi(p);
            if p <= 0.0 && p.fract() == 0.0 {
                return Err(Error::ExcludedParameter(format!(
                    "p = {p} is a pole of psi"
                )));
            }
            if !pv.is_finite() || pv.abs() < 1e-12 || rho.iter().any(|r| (r - p).abs() < 1e-9) {
                return Err(Error::ExcludedParameter(format!(
                    "p = {p} is a zero of psi"
                )));
            }
            let mut s = CompensatedSum::new();
            s.add(real(1.0 / (rho[0] - p) + 1.0 / p));
            for (n, r) in rho.iter().enumerate().skip(1) {
                s.add(real(1.0 / (r - p) + 1.0 / (n as f64 + p)));
            }
            let rhs = -polygamma(1, real(p))? / pv;
            let mut pair = paired(
                s.value().re,
                "1/(rho_0 - p) + 1/p + sum (1/(rho_n - p) + 1/(n + p))",
            );
            pair.rhs = rhs;
            Ok(pair.note("rho_0 and the pole at 0 enter as an unpaired leading term"))
        }
        DigammaIdentity::Eq45 { k } => {
            if k == 0 || k as usize >= n_max {
                return Err(Error::ExcludedParameter(format!("k = {k}")));
            }
            let kf = k as f64;
            let mut s = CompensatedSum::new();
            s.add(real(1.0 / (rho[0] + kf) - 1.0 / kf));
            s.add(real(1.0 / (rho[k as usize] + kf)));
            for (n, r) in rho.iter().enumerate().skip(1) {
                if n as u64 != k {
                    s.add(real(1.0 / (r + kf) + 1.0 / (n as f64 - kf)));
                }
            }
            let mut pair = paired(
                s.value().re,
                "1/(rho_0 + k) - 1/k + 1/(rho_k + k) + sum_{n != k} (1/(rho_n + k) + 1/(n - k))",
            );
            pair.rhs = real(harmonic(k, 1) - g);
            Ok(pair.note("right side uses H_k"))
        }
        DigammaIdentity::Eq46 { k } => {
            if k as usize >= n_max {
                return Err(Error::ExcludedParameter(format!("k = {k}")));
            }
            let rk = rho[k as usize];
            let kf = k as f64;
            let mut s = CompensatedSum::new();
            s.add(real(1.0 / (kf + rk)));
            for (n, r) in rho.iter().enumerate() {
                if n as u64 != k {
                    s.add(real(1.0 / (r - rk) + 1.0 / (n as f64 + rk)));
                }
            }
            let rhs = -polygamma(2, real(rk))? / (2.0 * polygamma(1, real(rk))?);
            let mut pair = paired(
                s.value().re,
                "1/(k + rho_k) + sum_{n != k} (1/(rho_n - rho_k) + 1/(n + rho_k))",
            );
            pair.rhs = rhs;
            Ok(pair.note("the pole at -k enters as 1/(k + rho_k)"))
        }
        DigammaIdentity::SumRhoSq => {
            let s: f64 = rho.iter().map(|r| 1.0 / (r * r)).sum();
            let tail = inverse_square_tail(n_max);
            Ok(IdentityPair::new(
                SeriesResult {
                    value: real(s + tail),
                    abs_err_estimate: 2.0 * paired_tail(n_max) / n_max as f64,
                    terms_used: n_max + 1,
                },
                real(g * g + 3.0 * zeta_int(2)?),
            )
            .note(format!(
                "ladder tail sum_{{n>N}} 1/n^2 = {tail:.3e} applied"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        let z = digamma_zeros(3).unwrap();
        assert!((z[0] - 1.461632144968362).abs() < 1e-13);
        assert!((z[1] + 0.504083008264455).abs() < 1e-12);
        assert!(z.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn excluded_parameters() {
        for p in [0.0, -2.0, 1.461632144968362] {
            assert!(matches!(
                digamma_identity(DigammaIdentity::Eq44 { p }, 10),
                Err(Error::ExcludedParameter(_))
            ));
        }
    }

    #[test]
    fn identities_close() {
        for id in [
            DigammaIdentity::Eq42,
            DigammaIdentity::Eq43Limit,
            DigammaIdentity::Eq44 { p: 0.5 },
            DigammaIdentity::Eq44 { p: 1.0 / 3.0 },
            DigammaIdentity::Eq44 { p: 2.5 },
            DigammaIdentity::Eq45 { k: 1 },
            DigammaIdentity::Eq45 { k: 2 },
            DigammaIdentity::Eq45 { k: 3 },
            DigammaIdentity::Eq46 { k: 0 },
            DigammaIdentity::Eq46 { k: 2 },
            DigammaIdentity::SumRhoSq,
        ] {
            let pair = digamma_identity(id, 10_000).unwrap();
            assert!(
                pair.abs_diff() <= pair.lhs.abs_err_estimate,
                "{id:?}: {pair:?}"
            );
        }
    }
}
