//! Special functions and the coefficient functions of the zero-sum identities.

mod constants;
mod gamma;
mod incomplete;
mod laurent;
mod polygamma;

pub use constants::{
    bernoulli, bernoulli_over_factorial, euler_gamma, harmonic, stieltjes, zeta_int, MAX_BERNOULLI,
};
pub use gamma::{digamma, gamma, ln_gamma};
pub use incomplete::{
    a_coeff, b_coeff, b_coeff_recursion, b_coeff_series, ein, incomplete_zeta_q,
    lower_incomplete_gamma,
};
pub use laurent::{digamma_head_at, gamma_head_at_zero, polygamma_head_at, LaurentHead};
pub use polygamma::polygamma;

#[allow(unused_imports)]
pub(crate) use constants::zeta_real;

use num_complex::Complex64;

/// Returns `Some(n)` when `z` is the non-positive integer `-n`.
pub(crate) fn nonpositive_integer(z: Complex64) -> Option<u64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        Some((-z.re) as u64)
    } else {
        None
    }
}

/// `cot(pi z)` evaluated without overflow for large imaginary parts.
pub(crate) fn cot_pi(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    let w = std::f64::consts::PI * Complex64::new(z.re - z.re.round(), z.im);
    if w.im >= 0.0 {
        let e = (2.0 * i * w).exp();
        i * (e + 1.0) / (e - 1.0)
    } else {
        let e = (-2.0 * i * w).exp();
        -i * (e + 1.0) / (e - 1.0)
    }
}
