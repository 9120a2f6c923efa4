use std::f64::consts::PI;

use num_complex::Complex64;

use super::{bernoulli, cot_pi, nonpositive_integer};
use crate::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

fn ln_gamma_lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + a.ln()
}

/// Principal branch of `ln Gamma(z)`, continuous off the negative real axis.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole(z));
    }
    if z.re >= 0.5 {
        return Ok(ln_gamma_lanczos(z));
    }
    if !(z.re > -1e6) {
        return Err(Error::Domain(format!(
            "Re z = {} below the recurrence range",
            z.re
        )));
    }
    let shift = (0.5 - z.re).ceil() as usize;
    let mut logs = Complex64::new(0.0, 0.0);
    for k in 0..shift {
        logs += (z + k as f64).ln();
    }
    Ok(ln_gamma_lanczos(z + shift as f64) - logs)
}

/// `sin(pi z)` with the argument reduced modulo 2 before scaling.
fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let v = (PI * Complex64::new(z.re - n, z.im)).sin();
    if n.rem_euclid(2.0) == 0.0 {
        v
    } else {
        -v
    }
}

/// `Gamma(z)`, by reflection on the left half-plane.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole(z));
    }
    if z.re >= 0.5 {
        return Ok(ln_gamma_lanczos(z).exp());
    }
    let s = sin_pi(z);
    Ok(PI / (s * ln_gamma_lanczos(1.0 - z).exp()))
}

const ASYMPTOTIC_RE: f64 = 10.0;

fn digamma_asymptotic(z: Complex64) -> Complex64 {
    let zi2 = (z * z).inv();
    let mut p = zi2;
    let mut acc = z.ln() - 0.5 / z;
    for k in 1..=10 {
        acc -= bernoulli(2 * k).unwrap() / (2 * k) as f64 * p;
        p *= zi2;
    }
    acc
}

/// Digamma function `psi(z) = Gamma'(z)/Gamma(z)`.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::Pole(z));
    }
    if z.re < 0.0 {
        return Ok(digamma(1.0 - z)? - PI * cot_pi(z));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < ASYMPTOTIC_RE {
        shift += w.inv();
        w += 1.0;
    }
    Ok(digamma_asymptotic(w) - shift)
}
