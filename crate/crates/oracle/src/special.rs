//! Reference values of the special functions by Stirling series,
//! Euler-Maclaurin sums and Gauss-Legendre quadrature.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::quad::integrate;

/// `B_{2j}` for `j = 1..=8`.
const B2J: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const TOL: f64 = 1e-15;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `ln Gamma(z)` (some branch) by upward shift to `Re z >= 20` and Stirling.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = c(0.0);
    while w.re < 20.0 {
        shift += w.ln();
        w += 1.0;
    }
    let mut s = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln();
    let w2 = (w * w).inv();
    let mut p = w.inv();
    for (j, b) in B2J.iter().enumerate() {
        let k = 2.0 * (j + 1) as f64;
        s += b / (k * (k - 1.0)) * p;
        p *= w2;
    }
    s - shift
}

/// `Gamma(z)` away from the poles.
pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}

/// Digamma by downward recurrence from the asymptotic series at `Re z >= 20`.
pub fn digamma(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = c(0.0);
    while w.re < 20.0 {
        shift += w.inv();
        w += 1.0;
    }
    let mut s = w.ln() - 0.5 / w;
    let w2 = (w * w).inv();
    let mut p = w2;
    for (j, b) in B2J.iter().enumerate() {
        s -= b / (2.0 * (j + 1) as f64) * p;
        p *= w2;
    }
    s - shift
}

/// Digamma from Binet's integral, `Re z > 0`.
pub fn digamma_binet(z: Complex64) -> Complex64 {
    let tail = integrate(
        |t| {
            if t == 0.0 {
                return c(0.0);
            }
            c(t) / ((t * t + z * z) * ((2.0 * PI * t).exp() - 1.0))
        },
        0.0,
        12.0,
        TOL,
    );
    z.ln() - 0.5 / z - 2.0 * tail
}

/// `psi^{(n)}(z) = (-1)^{n+1} n! sum_k (z+k)^{-n-1}`, `n >= 1`, summed to
/// `k < 40` with an Euler-Maclaurin remainder.
pub fn polygamma(n: u32, z: Complex64) -> Complex64 {
    assert!(n >= 1);
    const N: usize = 40;
    let m = n as i32 + 1;
    let mut s = c(0.0);
    for k in 0..N {
        s += (z + k as f64).powi(-m);
    }
    let w = z + N as f64;
    s += w.powi(-(m - 1)) / (m - 1) as f64 + 0.5 * w.powi(-m);
    // B_{2j}/(2j)! * m (m+1) ... (m+2j-2) w^{-m-2j+1}
    let mut rising = m as f64;
    let mut fact = 2.0;
    for (j, b) in B2J.iter().enumerate() {
        let jj = (j + 1) as i32;
        s += b / fact * rising * w.powi(-m - 2 * jj + 1);
        rising *= (m + 2 * jj - 1) as f64 * (m + 2 * jj) as f64;
        fact *= (2 * jj + 1) as f64 * (2 * jj + 2) as f64;
    }
    let nf: f64 = (1..=n).map(f64::from).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    s * (sign * nf)
}

/// `z^{-s} gamma(s, z) = int_0^1 u^{s-1} e^{-zu} du` for `Re s > 0`,
/// with `u = v^p` removing the endpoint singularity.
pub fn lower_gamma_quad(s: Complex64, z: Complex64) -> Complex64 {
    assert!(s.re > 0.0);
    let p = (2.0 / s.re).ceil().max(1.0);
    integrate(
        |v| {
            if v == 0.0 {
                return c(0.0);
            }
            let u = v.powf(p);
            p * (c(v.ln()) * (p * s - 1.0)).exp() * (-z * u).exp()
        },
        0.0,
        1.0,
        TOL,
    )
}

fn bernoulli_generating(x: Complex64) -> Complex64 {
    // x / (e^x - 1)
    if x.norm() < 1e-3 {
        return 1.0 - x / 2.0 + x * x / 12.0 - x * x * x * x / 720.0;
    }
    x / (x.exp() - 1.0)
}

/// `z^{1-s} Q(s, z) = int_0^1 u^{s-2} (zu)/(e^{zu}-1) du` for `Re s > 1`, `|z| < 2 pi`.
pub fn zeta_q_quad(s: Complex64, z: Complex64) -> Complex64 {
    assert!(s.re > 1.0);
    let p = (2.0 / (s.re - 1.0)).ceil().max(1.0);
    integrate(
        |v| {
            if v == 0.0 {
                return c(0.0);
            }
            let u = v.powf(p);
            p * (c(v.ln()) * (p * (s - 1.0) - 1.0)).exp() * bernoulli_generating(z * u)
        },
        0.0,
        1.0,
        TOL,
    )
}

fn one_minus_exp_neg(x: Complex64) -> Complex64 {
    if x.norm() < 1e-3 {
        return x - x * x / 2.0 + x * x * x / 6.0 - x * x * x * x / 24.0;
    }
    1.0 - (-x).exp()
}

/// `Ein(z) = int_0^inf (1 - exp(-z e^{-t})) dt`.
pub fn ein_quad(z: Complex64) -> Complex64 {
    integrate(|t| one_minus_exp_neg(z * (-t).exp()), 0.0, 60.0, TOL)
}

/// `a_2(z) = int_0^z Ein(t)/t dt = int_0^inf t (1 - exp(-z e^{-t})) dt`.
pub fn a2_quad(z: Complex64) -> Complex64 {
    integrate(|t| t * one_minus_exp_neg(z * (-t).exp()), 0.0, 60.0, TOL)
}

fn bernoulli_kernel(t: Complex64) -> Complex64 {
    if t.norm() < 0.5 {
        // sum_j B_{2j} t^{2j-2} / (2j)!
        let t2 = t * t;
        let mut p = c(1.0);
        let mut fact = 2.0;
        let mut s = c(0.0);
        for (j, b) in B2J.iter().enumerate() {
            s += b / fact * p;
            p *= t2;
            let jj = (j + 1) as f64;
            fact *= (2.0 * jj + 1.0) * (2.0 * jj + 2.0);
        }
        return s;
    }
    (t * (t.exp() - 1.0)).inv() - (t * t).inv() + 0.5 / t
}

/// `b_k(z) = 1 + (-1)^k z^2 int_0^inf h(z e^{-t}) t^{k-1}/(k-1)! e^{-t} dt`
/// with `h(t) = 1/(t(e^t-1)) - 1/t^2 + 1/(2t)`.
pub fn b_quad(k: u32, z: Complex64) -> Complex64 {
    assert!(k >= 1);
    let fact: f64 = (1..k).map(f64::from).product();
    let v = integrate(
        |t| bernoulli_kernel(z * (-t).exp()) * (t.powi(k as i32 - 1) / fact * (-t).exp()),
        0.0,
        60.0 + 4.0 * k as f64,
        TOL,
    );
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    1.0 + sign * z * z * v
}
