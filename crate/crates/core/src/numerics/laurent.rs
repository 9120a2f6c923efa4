use num_complex::Complex64;

use super::{euler_gamma, harmonic, zeta_int};

/// Local expansion `c_minus1 / x^pole_order + c0 + c1 x + c2 x^2 + O(x^3)`
/// with `x = z - z0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentHead {
    pub z0: Complex64,
    pub pole_order: u32,
    pub c_minus1: Complex64,
    pub c0: Complex64,
    pub c1: Complex64,
    pub c2: Complex64,
}

impl LaurentHead {
    /// Evaluates the truncated expansion at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let x = z - self.z0;
        self.c_minus1 / x.powu(self.pole_order) + self.c0 + x * (self.c1 + x * self.c2)
    }
}

/// `Gamma(z) = 1/z - gamma + (gamma^2/2 + pi^2/12) z + c2 z^2 + ...` at `z = 0`.
pub fn gamma_head_at_zero() -> LaurentHead {
    let g = euler_gamma();
    let z2 = zeta_int(2).unwrap();
    let z3 = zeta_int(3).unwrap();
    LaurentHead {
        z0: Complex64::new(0.0, 0.0),
        pole_order: 1,
        c_minus1: 1.0.into(),
        c0: (-g).into(),
        c1: (0.5 * g * g + 0.5 * z2).into(),
        c2: (-(g * g * g) / 6.0 - g * z2 / 2.0 - z3 / 3.0).into(),
    }
}

/// Coefficient `c_k` (k >= 1) of `psi(-n + x) = -1/x + psi(n+1) + sum c_k x^k`.
fn digamma_regular_coeff(n: u64, k: u32) -> f64 {
    let z = zeta_int(k + 1).unwrap();
    let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
    harmonic(n, k + 1) + sign * z
}

/// Laurent head of `psi` at the pole `-n`.
pub fn digamma_head_at(n: u64) -> LaurentHead {
    let psi_n1 = harmonic(n, 1) - euler_gamma();
    LaurentHead {
        z0: Complex64::new(-(n as f64), 0.0),
        pole_order: 1,
        c_minus1: (-1.0).into(),
        c0: psi_n1.into(),
        c1: digamma_regular_coeff(n, 1).into(),
        c2: digamma_regular_coeff(n, 2).into(),
    }
}

/// Laurent head of `psi^(m)` at the pole `-n`; the principal part is
/// `(-1)^(m+1) m! / x^(m+1)`.
pub fn polygamma_head_at(m: u32, n: u64) -> LaurentHead {
    if m == 0 {
        return digamma_head_at(n);
    }
    let falling = |k: u32| -> f64 { ((k - m + 1)..=k).map(f64::from).product() };
    let coeff = |j: u32| -> Complex64 {
        let k = m + j;
        (digamma_regular_coeff(n, k) * falling(k)).into()
    };
    let fact: f64 = (1..=m).map(f64::from).product();
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    LaurentHead {
        z0: Complex64::new(-(n as f64), 0.0),
        pole_order: m + 1,
        c_minus1: (sign * fact).into(),
        c0: coeff(0),
        c1: coeff(1),
        c2: coeff(2),
    }
}
