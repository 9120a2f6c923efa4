//! Incomplete gamma and zeta type series and the coefficient functions
//! `Ein`, `a_m` and `b_k`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{euler_gamma, nonpositive_integer, zeta_int};
use crate::quad::{integrate, tanh_sinh_unit};
use crate::sum::Truncation;
use crate::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;

/// `z^{-s} gamma(s, z)`, the normalized lower incomplete gamma function.
pub fn lower_incomplete_gamma(s: Complex64, z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(s).is_some() {
        return Err(Error::Pole(s));
    }
    if !use_series(z) {
        let head = super::gamma(s)? * (-s * z.ln()).exp();
        return Ok(head - (-z).exp() * upper_gamma_cf(s, z)?);
    }
    let tr = Truncation::default();
    if z.re >= 0.0 {
        // e^{-z} sum z^n / (s (s+1) ... (s+n))
        let mut p = s.inv();
        let (v, _) = tr.sum(0, |n| {
            if n > 0 {
                p *= z / (s + n as f64);
            }
            p
        })?;
        Ok((-z).exp() * v)
    } else {
        let mut p = Complex64::new(1.0, 0.0);
        let (v, _) = tr.sum(0, |n| {
            if n > 0 {
                p *= -z / n as f64;
            }
            p / (s + n as f64)
        })?;
        Ok(v)
    }
}

/// `B_{2m} z^{2m} / (2m)!` for `m = 1, 2, ...`, generated without overflow.
struct EvenBernoulliTerms {
    r: Complex64,
    pow: Complex64,
    m: u32,
}

impl EvenBernoulliTerms {
    fn new(z: Complex64) -> Self {
        let w = z / TWO_PI;
        Self {
            r: w * w,
            pow: Complex64::new(1.0, 0.0),
            m: 0,
        }
    }

    fn next_term(&mut self) -> Complex64 {
        self.m += 1;
        self.pow *= self.r;
        let sign = if self.m % 2 == 1 { 2.0 } else { -2.0 };
        self.pow * (sign * zeta_int(2 * self.m).unwrap())
    }
}

/// `z^{1-s} Q(s, z) = sum B_n z^n / (n! (n + s - 1))` for `|z| < 2 pi`.
pub fn incomplete_zeta_q(s: Complex64, z: Complex64) -> Result<Complex64> {
    if z.norm() >= TWO_PI {
        return Err(Error::Domain(format!(
            "|z| = {} is not below 2 pi",
            z.norm()
        )));
    }
    if s == Complex64::new(1.0, 0.0) || nonpositive_integer(s).is_some() {
        return Err(Error::Pole(s));
    }
    let head = (s - 1.0).inv() - 0.5 * z / s;
    let mut terms = EvenBernoulliTerms::new(z);
    let (tail, _) = Truncation::default().sum(1, |m| {
        let t = terms.next_term();
        t / (s + (2 * m) as f64 - 1.0)
    })?;
    Ok(head + tail)
}

/// `e^z z^{-s} Gamma(s, z)` by Lentz's evaluation of Legendre's continued fraction.
fn upper_gamma_cf(s: Complex64, z: Complex64) -> Result<Complex64> {
    let tiny = 1e-300;
    let mut b = z + 1.0 - s;
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..100_000 {
        let a = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = (a * d + b).inv();
        c = b + a / c;
        if c.norm() < tiny {
            c = tiny.into();
        }
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            return Ok(h);
        }
    }
    Err(Error::NonConvergence { terms: 100_000 })
}

/// Exponential integral `E_1(z)`.
fn e1_continued_fraction(z: Complex64) -> Result<Complex64> {
    Ok(upper_gamma_cf(Complex64::new(0.0, 0.0), z)? * (-z).exp())
}

fn use_series(z: Complex64) -> bool {
    z.norm() - (-z.re).max(0.0) <= 12.0
}

/// Entire function `Ein(z) = sum_{n>=1} (-1)^{n+1} z^n / (n! n)`.
pub fn ein(z: Complex64) -> Complex64 {
    if use_series(z) {
        let mut p = Complex64::new(1.0, 0.0);
        let (v, _) = Truncation::default()
            .sum(1, |n| {
                p *= -z / n as f64;
                -p / n as f64
            })
            .expect("Ein series converges for every finite argument");
        v
    } else {
        let e1 = e1_continued_fraction(z).expect("continued fraction converges off the cut");
        euler_gamma() + z.ln() + e1
    }
}

fn a2_series(z: Complex64) -> Result<Complex64> {
    let mut p = Complex64::new(1.0, 0.0);
    let (v, _) = Truncation::default().sum(1, |n| {
        p *= -z / n as f64;
        -p / (n * n) as f64
    })?;
    Ok(v)
}

/// Coefficients `a_1(z) = -Ein(z)` and `a_2(z) = int_0^z Ein(t)/t dt`.
pub fn a_coeff(m: u32, z: Complex64) -> Result<Complex64> {
    match m {
        1 => Ok(-ein(z)),
        2 if use_series(z) => a2_series(z),
        2 => {
            let z0 = z * (10.0 / z.norm());
            let base = a2_series(z0)?;
            let dz = z - z0;
            let q = integrate(
                |u| {
                    let t = z0 + dz * u;
                    ein(t) / t * dz
                },
                0.0,
                1.0,
                1e-14 * base.norm().max(1.0),
                1e-14,
                400,
            )?;
            Ok(base + q.value)
        }
        _ => Err(Error::UnsupportedIndex(m as i64)),
    }
}

/// `h(t) = 1/(t (e^t - 1)) - 1/t^2 + 1/(2t)`, regular at the origin.
fn bernoulli_kernel(t: Complex64) -> Complex64 {
    if t.norm() < 0.5 {
        let mut terms = EvenBernoulliTerms::new(t);
        let t2 = t * t;
        let (v, _) = Truncation::default()
            .sum(1, |_| terms.next_term())
            .expect("kernel series converges inside the unit disc");
        return v / t2;
    }
    let first = if t.re > 700.0 {
        Complex64::new(0.0, 0.0)
    } else {
        (t * (t.exp() - 1.0)).inv()
    };
    first - (t * t).inv() + 0.5 / t
}

const B_SWITCH: f64 = 5.5;

/// `b_k(z)` from its Bernoulli series, valid for `|z| < 2 pi`.
pub fn b_coeff_series(k: u32, z: Complex64) -> Result<Complex64> {
    if k == 0 {
        return Err(Error::UnsupportedIndex(0));
    }
    if z.norm() >= TWO_PI {
        return Err(Error::Domain(format!(
            "|z| = {} is not below 2 pi",
            z.norm()
        )));
    }
    let mut terms = EvenBernoulliTerms::new(z);
    let (v, _) = Truncation::default().sum(1, |m| {
        let t = terms.next_term();
        t / ((2 * m - 1) as f64).powi(k as i32)
    })?;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(1.0 + sign * v)
}

fn check_ray(z: Complex64) -> Result<()> {
    let r = z.norm();
    let n_max = (r / TWO_PI).floor() as i64;
    for n in 1..=n_max {
        for p in [
            Complex64::new(0.0, TWO_PI * n as f64),
            Complex64::new(0.0, -TWO_PI * n as f64),
        ] {
            // Distance from p to the segment [0, z].
            let u = ((p * z.conj()).re / (r * r)).clamp(0.0, 1.0);
            if (p - z * u).norm() < 1e-8 {
                return Err(Error::Singularity(p));
            }
        }
    }
    Ok(())
}

/// `b_k(z)` from the integral recursion `b_{k+1}(z) = 1 - z int_0^z (b_k(t)-1)/t^2 dt`
/// with `b_1 = 1 - z int_0^z h(t) dt`, collapsed to the single ray integral
/// `b_k(z) = 1 + (-1)^k z^2 int_0^1 h(z v) (-ln v)^{k-1}/(k-1)! dv`.
pub fn b_coeff_recursion(k: u32, z: Complex64) -> Result<Complex64> {
    if k == 0 {
        return Err(Error::UnsupportedIndex(0));
    }
    if z.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    check_ray(z)?;
    let fact: f64 = (1..k).map(f64::from).product();
    let km1 = (k - 1) as i32;
    let integrand = |v: f64| bernoulli_kernel(z * v) * (-v.ln()).powi(km1) / fact;
    let split = if z.norm() > 1.0 { 1.0 / z.norm() } else { 1.0 };
    let mut total = tanh_sinh_unit(|u| integrand(split * u) * split, 1e-14).value;
    if split < 1.0 {
        let w = 1.0 - split;
        total += tanh_sinh_unit(|u| integrand(split + w * u) * w, 1e-14).value;
    }
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let out = 1.0 + sign * z * z * total;
    if !out.re.is_finite() || !out.im.is_finite() {
        return Err(Error::Singularity(z));
    }
    Ok(out)
}

/// `b_k(z)`: Bernoulli series for `|z| < 5.5`, integral recursion beyond.
pub fn b_coeff(k: u32, z: Complex64) -> Result<Complex64> {
    if z.norm() < B_SWITCH {
        b_coeff_series(k, z)
    } else {
        b_coeff_recursion(k, z)
    }
}
