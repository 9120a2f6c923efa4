//! Bernoulli numbers, zeta at integers, Stieltjes constants and harmonic numbers.
//!
//! Every constant is produced once by Euler–Maclaurin summation (head of 50
//! terms, 10 Bernoulli corrections) and cached for the lifetime of the
//! process, so repeated evaluations are bit-identical.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::{Error, Result};

const EM_HEAD: usize = 50;
const EM_CORRECTIONS: usize = 10;
/// Largest index served by [`bernoulli`].
pub const MAX_BERNOULLI: usize = 60;
const ZETA_TABLE: usize = 128;

struct Tables {
    bernoulli: [f64; MAX_BERNOULLI + 1],
    zeta: Vec<f64>,
    euler_gamma: f64,
    gamma1: f64,
}

static TABLES: OnceLock<Tables> = OnceLock::new();

/// Zeta at real `s > 1` from a 100-term head plus three fixed corrections.
/// Used only to seed the Bernoulli table.
fn zeta_seed(s: f64) -> f64 {
    let k = 100.0f64;
    let head: f64 = (1..100).rev().map(|n| (n as f64).powf(-s)).sum();
    let ks = k.powf(-s);
    head + k.powf(1.0 - s) / (s - 1.0) + 0.5 * ks + s * ks / k / 12.0
        - s * (s + 1.0) * (s + 2.0) * ks / k.powi(3) / 720.0
        + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * ks / k.powi(5) / 30240.0
}

fn tables() -> &'static Tables {
    TABLES.get_or_init(|| {
        let mut b = [0.0; MAX_BERNOULLI + 1];
        b[0] = 1.0;
        b[1] = -0.5;
        let mut fact = 2.0f64; // (2m)!
        for m in 1..=MAX_BERNOULLI / 2 {
            if m > 1 {
                fact *= (2 * m - 1) as f64 * (2 * m) as f64;
            }
            let n = 2 * m;
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            b[n] = sign * 2.0 * fact * zeta_seed(n as f64) / (2.0 * PI).powi(n as i32);
        }

        let n = EM_HEAD as f64;
        // B_{2m}/(2m)! products reused by all three expansions.
        let mut zeta = vec![f64::NAN; ZETA_TABLE + 1];
        for (j, slot) in zeta.iter_mut().enumerate().skip(2) {
            let s = j as f64;
            let head: f64 = (1..EM_HEAD).rev().map(|k| (k as f64).powf(-s)).sum();
            let ns = n.powf(-s);
            let mut acc = head + n.powf(1.0 - s) / (s - 1.0) + 0.5 * ns;
            // s(s+1)...(s+2m-2) / (2m)! * B_{2m} * N^{-s-2m+1}
            let mut rising = s;
            let mut fact = 2.0;
            for m in 1..=EM_CORRECTIONS {
                if m > 1 {
                    let k = (2 * m) as f64;
                    rising *= (s + k - 3.0) * (s + k - 2.0);
                    fact *= (k - 1.0) * k;
                }
                acc += b[2 * m] / fact * rising * ns / n.powi(2 * m as i32 - 1);
            }
            *slot = acc;
        }

        let ln_n = n.ln();
        // gamma = H_N - ln N - 1/(2N) + sum B_{2m} / (2m N^{2m})
        let h_n: f64 = (1..=EM_HEAD).rev().map(|k| 1.0 / k as f64).sum();
        let mut euler_gamma = h_n - ln_n - 0.5 / n;
        for m in 1..=EM_CORRECTIONS {
            euler_gamma += b[2 * m] / (2 * m) as f64 / n.powi(2 * m as i32);
        }

        // gamma_1 = sum ln k / k - ln^2 N / 2 - ln N / (2N)
        //           + sum B_{2m}/(2m) (ln N - H_{2m-1}) / N^{2m}
        let s_n: f64 = (1..=EM_HEAD)
            .rev()
            .map(|k| (k as f64).ln() / k as f64)
            .sum();
        let mut gamma1 = s_n - 0.5 * ln_n * ln_n - 0.5 * ln_n / n;
        for m in 1..=EM_CORRECTIONS {
            let h: f64 = (1..2 * m).map(|l| 1.0 / l as f64).sum();
            gamma1 += b[2 * m] / (2 * m) as f64 * (ln_n - h) / n.powi(2 * m as i32);
        }

        Tables {
            bernoulli: b,
            zeta,
            euler_gamma,
            gamma1,
        }
    })
}

/// Euler–Mascheroni constant.
pub fn euler_gamma() -> f64 {
    tables().euler_gamma
}

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Result<f64> {
    if n > MAX_BERNOULLI {
        return Err(Error::Overflow(format!(
            "Bernoulli numbers are tabulated up to n = {MAX_BERNOULLI}"
        )));
    }
    Ok(tables().bernoulli[n])
}

/// `B_n / n!` for any `n`, computed without forming the large factors.
pub fn bernoulli_over_factorial(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => -0.5,
        _ if n % 2 == 1 => 0.0,
        _ => {
            let sign = if (n / 2) % 2 == 1 { 1.0 } else { -1.0 };
            sign * 2.0 * zeta_real(n as f64) * (-(n as f64) * (2.0 * PI).ln()).exp()
        }
    }
}

/// Riemann zeta at an integer `j >= 2`.
pub fn zeta_int(j: u32) -> Result<f64> {
    if j < 2 {
        return Err(Error::Domain(format!("zeta_int needs j >= 2, got {j}")));
    }
    let t = tables();
    if (j as usize) <= ZETA_TABLE {
        Ok(t.zeta[j as usize])
    } else {
        Ok(1.0 + 2f64.powi(-(j as i32)))
    }
}

/// Zeta at real `s > 1` (direct summation for large `s`, Euler–Maclaurin otherwise).
pub(crate) fn zeta_real(s: f64) -> f64 {
    if s.fract() == 0.0 && s >= 2.0 && s <= ZETA_TABLE as f64 {
        return tables().zeta[s as usize];
    }
    if s > 40.0 {
        return 1.0 + 2f64.powf(-s) + 3f64.powf(-s);
    }
    zeta_seed(s)
}

/// Stieltjes constants `gamma_0 = gamma` and `gamma_1`.
pub fn stieltjes(n: u32) -> Result<f64> {
    match n {
        0 => Ok(tables().euler_gamma),
        1 => Ok(tables().gamma1),
        _ => Err(Error::UnsupportedIndex(n as i64)),
    }
}

/// Generalized harmonic number `H_n^{(k)} = sum_{l=1}^{n} l^{-k}`.
pub fn harmonic(n: u64, k: u32) -> f64 {
    assert!(k >= 1, "harmonic order must be positive");
    (1..=n).rev().map(|l| (l as f64).powi(-(k as i32))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_convention() {
        assert_eq!(bernoulli(1).unwrap(), -0.5);
        assert_eq!(bernoulli(3).unwrap(), 0.0);
        assert!((bernoulli(2).unwrap() - 1.0 / 6.0).abs() < 1e-16);
        assert!(bernoulli(61).is_err());
    }

    #[test]
    fn bernoulli_against_exact_rationals() {
        let exact = [
            (4, -1.0 / 30.0),
            (6, 1.0 / 42.0),
            (8, -1.0 / 30.0),
            (10, 5.0 / 66.0),
            (12, -691.0 / 2730.0),
            (14, 7.0 / 6.0),
            (20, -174611.0 / 330.0),
        ];
        for (n, v) in exact {
            let b = bernoulli(n).unwrap();
            assert!(((b - v) / v).abs() < 1e-14, "B_{n} = {b}, want {v}");
        }
    }

    #[test]
    fn zeta_even_closed_forms() {
        assert!((zeta_int(2).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta_int(4).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!(zeta_int(1).is_err());
    }

    #[test]
    fn harmonic_examples() {
        assert!((harmonic(3, 1) - 11.0 / 6.0).abs() < 1e-15);
        assert!((harmonic(2, 2) - 1.25).abs() < 1e-15);
        assert_eq!(harmonic(0, 1), 0.0);
    }

    #[test]
    fn stieltjes_index_checked() {
        assert!(matches!(stieltjes(2), Err(Error::UnsupportedIndex(2))));
    }

    #[test]
    fn bernoulli_over_factorial_matches_table() {
        let mut f = 1.0;
        for n in 1..=30usize {
            f *= n as f64;
            let q = bernoulli_over_factorial(n);
            let b = bernoulli(n).unwrap() / f;
            assert!((q - b).abs() <= 1e-14 * b.abs().max(1e-300), "n={n}");
        }
    }
}
