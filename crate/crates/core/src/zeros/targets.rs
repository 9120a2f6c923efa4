//! Function handles for the target functions used throughout the crate.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::handle::{FunctionHandle, ZeroPoleRecord};
use crate::numerics::{digamma, gamma, incomplete_zeta_q, lower_incomplete_gamma, polygamma};
use crate::Result;

/// Number of non-positive-integer poles listed on ladder handles.
pub const LADDER_POLES: u64 = 2000;

const NAN: Complex64 = Complex64::new(f64::NAN, f64::NAN);

fn or_nan(r: Result<Complex64>) -> Complex64 {
    r.unwrap_or(NAN)
}

fn ladder(first: u64, step: u64, order: u32) -> Vec<ZeroPoleRecord> {
    (0..LADDER_POLES)
        .map(|k| ZeroPoleRecord::pole(Complex64::new(-((first + k * step) as f64), 0.0), order))
        .collect()
}

/// `cos(pi z)`.
pub fn cos_pi() -> FunctionHandle {
    FunctionHandle::new("cos(pi z)", |z: Complex64| (PI * z).cos())
        .with_log_deriv(|z: Complex64| -PI * (PI * z).tan())
}

/// `sin z`.
pub fn sine() -> FunctionHandle {
    FunctionHandle::new("sin z", |z: Complex64| z.sin())
        .with_log_deriv(|z: Complex64| z.cos() / z.sin())
}

/// `e^z - c z`.
pub fn exp_minus_linear(c: Complex64) -> FunctionHandle {
    FunctionHandle::new(format!("e^z - ({c}) z"), move |z: Complex64| {
        z.exp() - c * z
    })
    .with_log_deriv(move |z: Complex64| (z.exp() - c) / (z.exp() - c * z))
}

/// `-z psi(z)`, with the pole at the origin cancelled.
pub fn neg_z_digamma() -> FunctionHandle {
    FunctionHandle::new("-z psi(z)", |z: Complex64| {
        if z.norm() < 1e-8 {
            // -z psi(z) = 1 + gamma z + O(z^2)
            return 1.0 + crate::numerics::euler_gamma() * z;
        }
        -z * or_nan(digamma(z))
    })
    .with_poles(ladder(1, 1, 1))
}

/// `psi(z)` with its poles at `0, -1, -2, ...`.
pub fn digamma_handle() -> FunctionHandle {
    FunctionHandle::new("psi(z)", |z: Complex64| or_nan(digamma(z))).with_poles(ladder(0, 1, 1))
}

/// `psi^{(n)}(z)` with poles of order `n + 1` at `0, -1, -2, ...`.
pub fn polygamma_handle(n: u32) -> FunctionHandle {
    FunctionHandle::new(format!("psi^({n})(z)"), move |z: Complex64| {
        or_nan(polygamma(n, z))
    })
    .with_log_deriv(move |z: Complex64| or_nan(polygamma(n + 1, z)) / or_nan(polygamma(n, z)))
    .with_poles(ladder(0, 1, n + 1))
}

/// `z (Gamma(z) - a) = Gamma(z + 1) - a z`, poles at `-1, -2, ...`.
pub fn gamma_level(a: Complex64) -> FunctionHandle {
    FunctionHandle::new(format!("z (Gamma(z) - ({a}))"), move |z: Complex64| {
        or_nan(gamma(z + 1.0)) - a * z
    })
    .with_poles(ladder(1, 1, 1))
}

/// `z^{-s} gamma(s, z)` as an entire function of `z`.
pub fn incomplete_gamma_in_z(s: Complex64) -> FunctionHandle {
    FunctionHandle::new(format!("z^-s gamma({s}, z)"), move |z: Complex64| {
        or_nan(lower_incomplete_gamma(s, z))
    })
}

/// `s z^{-s} gamma(s, z)` as a function of `s`, poles at `-1, -2, ...`.
pub fn incomplete_gamma_in_s(z: Complex64) -> FunctionHandle {
    FunctionHandle::new(format!("s z^-s gamma(s, {z})"), move |s: Complex64| {
        if s.norm() == 0.0 {
            return Complex64::new(1.0, 0.0);
        }
        s * or_nan(lower_incomplete_gamma(s, z))
    })
    .with_poles(ladder(1, 1, 1))
}

/// `(s - 1) z^{1-s} Q(s, z)` as a function of `z`, for `|z| < 2 pi`.
pub fn incomplete_zeta_in_z(s: Complex64) -> FunctionHandle {
    FunctionHandle::new(format!("(s-1) z^(1-s) Q({s}, z)"), move |z: Complex64| {
        (s - 1.0) * or_nan(incomplete_zeta_q(s, z))
    })
}

/// `-2 z^{-s} s Q(s, z)` as a function of `s`, for fixed `|z| < 2 pi`;
/// poles at `1, -1, -3, -5, ...`.
pub fn incomplete_zeta_in_s(z: Complex64) -> FunctionHandle {
    let mut poles = vec![ZeroPoleRecord::pole(Complex64::new(1.0, 0.0), 1)];
    poles.extend(ladder(1, 2, 1));
    FunctionHandle::new(format!("-2 z^-s s Q(s, {z})"), move |s: Complex64| {
        if s.norm() == 0.0 {
            return Complex64::new(1.0, 0.0);
        }
        -2.0 / z * s * or_nan(incomplete_zeta_q(s, z))
    })
    .with_poles(poles)
}

/// `sin(z^{3/2}) / z^{3/2}`, entire.
pub fn sinc_three_halves() -> FunctionHandle {
    FunctionHandle::new("sin(z^1.5)/z^1.5", |z: Complex64| {
        let u = z * z * z;
        if u.norm() < 1e-3 {
            // sum (-1)^k u^k / (2k+1)!
            return 1.0 - u / 6.0 + u * u / 120.0 - u * u * u / 5040.0;
        }
        let w = z.powf(1.5);
        w.sin() / w
    })
}
