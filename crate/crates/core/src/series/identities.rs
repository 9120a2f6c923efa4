//! Infinite-sum identities with a truncated left side and a closed-form right side.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::accel::{accelerated_sum, bilateral, Budget, SeriesKind, SeriesResult};
use crate::numerics::{polygamma, zeta_int};
use crate::{Error, Result};

/// Identity families evaluated by [`identity_lhs`] and [`identity_rhs`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesIdentity {
    /// `sum_{n in Z} 1/(n + 1/2)^2 = pi^2`.
    HalfIntSq,
    /// `sum_{n in Z} 1/(pi n - b + c a)^2 = 1/sin^2(b - a c)`.
    Hansen6127 {
        a: Complex64,
        b: Complex64,
        c: Complex64,
    },
    /// `sum_{n>=0} (-1)^n/(n^2 a^2 - b^2) = -1/(2b^2) - pi/(2ab sin(pi b/a))`.
    Alt6139 { a: f64, b: f64 },
    /// `sum_{n>=1} [(sqrt n - c)^-3 + (-sqrt n - c)^-3] - 2/c^3
    ///  = 6c psi_1(-c^2) - 4c^3 psi_2(-c^2)`.
    SqrtCube { c: Complex64 },
    /// `sum_{n>=2} [(sqrt n - 1)^-3 + (-sqrt n - 1)^-3] = pi^2 + 8 zeta(3)`.
    SqrtCubeAt1,
    /// Grouped sum over the roots `(pi n)^{2/3} e^{2 pi i j/3}` of `sin(z^{3/2})`.
    ThreeHalves { a: Complex64 },
    /// `sum_{n in Z} 1/(b + 2 pi i n)^2 = e^b/(1 - e^b)^2`.
    ExpShift { b: Complex64 },
}

fn excluded(msg: impl Into<String>) -> Error {
    Error::ExcludedParameter(msg.into())
}

fn near_integer(w: Complex64) -> bool {
    w.im.abs() < 1e-12 && (w.re - w.re.round()).abs() < 1e-12
}

fn check(id: SeriesIdentity) -> Result<()> {
    match id {
        SeriesIdentity::HalfIntSq | SeriesIdentity::SqrtCubeAt1 => Ok(()),
        SeriesIdentity::Hansen6127 { a, b, c } => {
            if near_integer((b - c * a) / PI) {
                return Err(excluded("pi n - b + c a vanishes for some n"));
            }
            Ok(())
        }
        SeriesIdentity::Alt6139 { a, b } => {
            if a == 0.0 || b == 0.0 || near_integer(Complex64::new(b / a, 0.0)) {
                return Err(excluded("need a, b nonzero and b/a not an integer"));
            }
            Ok(())
        }
        SeriesIdentity::SqrtCube { c } => {
            let w = -(c * c);
            if c.norm() == 0.0 || (near_integer(w) && w.re <= 0.0) {
                return Err(excluded("c^2 must not be a non-negative integer"));
            }
            Ok(())
        }
        SeriesIdentity::ThreeHalves { a } => {
            if a.norm() == 0.0 || near_integer(a.powf(1.5) / PI) {
                return Err(excluded("a must avoid 0 and the roots of sin(z^{3/2})"));
            }
            Ok(())
        }
        SeriesIdentity::ExpShift { b } => {
            if near_integer(b / Complex64::new(0.0, 2.0 * PI)) {
                return Err(excluded("b must not lie in 2 pi i Z"));
            }
            Ok(())
        }
    }
}

const MONOTONE: SeriesKind = SeriesKind::MonotoneTail { tail_power: 2.0 };

fn three_halves_term(n: usize, a: Complex64) -> Complex64 {
    let r = (PI * n as f64).powf(2.0 / 3.0);
    let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    [Complex64::new(1.0, 0.0), w, w.conj()]
        .iter()
        .map(|u| (r * u - a).powi(-2))
        .sum()
}

/// Truncated, accelerated left side exactly as printed.
pub fn identity_lhs(id: SeriesIdentity, budget: Budget) -> Result<SeriesResult> {
    check(id)?;
    let cplx = |x: f64| Complex64::new(x, 0.0);
    match id {
        SeriesIdentity::HalfIntSq => accelerated_sum(
            bilateral(|n| cplx((n as f64 + 0.5).powi(-2))),
            0,
            MONOTONE,
            budget,
        ),
        SeriesIdentity::Hansen6127 { a, b, c } => {
            let w = b - c * a;
            accelerated_sum(
                bilateral(|n| (PI * n as f64 - w).powi(-2)),
                0,
                MONOTONE,
                budget,
            )
        }
        SeriesIdentity::Alt6139 { a, b } => accelerated_sum(
            |n| {
                let x = n as f64 * a;
                let s = if n % 2 == 0 { 1.0 } else { -1.0 };
                cplx(s / (x * x - b * b))
            },
            0,
            SeriesKind::Alternating,
            budget,
        ),
        SeriesIdentity::SqrtCube { c } => {
            let mut r = accelerated_sum(
                |n| {
                    let s = (n as f64).sqrt();
                    (s - c).powi(-3) + (-s - c).powi(-3)
                },
                1,
                MONOTONE,
                budget,
            )?;
            r.value -= 2.0 / (c * c * c);
            Ok(r)
        }
        SeriesIdentity::SqrtCubeAt1 => accelerated_sum(
            |n| {
                let s = (n as f64).sqrt();
                cplx((s - 1.0).powi(-3) + (-s - 1.0).powi(-3))
            },
            2,
            MONOTONE,
            budget,
        ),
        SeriesIdentity::ThreeHalves { a } => {
            accelerated_sum(|n| three_halves_term(n, a), 1, MONOTONE, budget)
        }
        SeriesIdentity::ExpShift { b } => accelerated_sum(
            bilateral(|n| (b + Complex64::new(0.0, 2.0 * PI * n as f64)).powi(-2)),
            0,
            MONOTONE,
            budget,
        ),
    }
}

/// Closed-form right side exactly as printed.
pub fn identity_rhs(id: SeriesIdentity) -> Result<Complex64> {
    check(id)?;
    Ok(match id {
        SeriesIdentity::HalfIntSq => (PI * PI).into(),
        SeriesIdentity::Hansen6127 { a, b, c } => (b - a * c).sin().powi(-2),
        SeriesIdentity::Alt6139 { a, b } => {
            (-0.5 / (b * b) - PI / (2.0 * a * b * (PI * b / a).sin())).into()
        }
        SeriesIdentity::SqrtCube { c } => {
            let w = -(c * c);
            6.0 * c * polygamma(1, w)? - 4.0 * c * c * c * polygamma(2, w)?
        }
        SeriesIdentity::SqrtCubeAt1 => (PI * PI + 8.0 * zeta_int(3)?).into(),
        SeriesIdentity::ThreeHalves { a } => {
            let t = a.powf(1.5);
            -0.75 / a.sqrt() / t.tan() + 2.25 * a / (t.sin() * t.sin()) - 1.5 / (a * a)
        }
        SeriesIdentity::ExpShift { b } => {
            let e = b.exp();
            e / ((1.0 - e) * (1.0 - e))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn agree(id: SeriesIdentity, tol: f64) {
        let l = identity_lhs(id, Budget::default()).unwrap();
        let r = identity_rhs(id).unwrap();
        assert!(
            (l.value - r).norm() <= tol.max(3.0 * l.abs_err_estimate),
            "{id:?}: {} vs {r}",
            l.value
        );
    }

    #[test]
    fn every_family_balances() {
        agree(SeriesIdentity::HalfIntSq, 1e-8);
        agree(
            SeriesIdentity::Hansen6127 {
                a: c(1.0, 0.0),
                b: c(0.5, 0.0),
                c: c(0.0, 0.0),
            },
            1e-8,
        );
        agree(SeriesIdentity::Alt6139 { a: 1.0, b: 0.5 }, 1e-8);
        agree(SeriesIdentity::SqrtCube { c: c(0.0, 1.0) }, 1e-6);
        agree(SeriesIdentity::SqrtCubeAt1, 1e-6);
        agree(SeriesIdentity::ThreeHalves { a: c(1.0, 0.0) }, 1e-6);
        agree(SeriesIdentity::ExpShift { b: c(1.0, 0.0) }, 1e-8);
    }

    #[test]
    fn printed_values() {
        let r = identity_rhs(SeriesIdentity::SqrtCubeAt1).unwrap();
        assert!((r.re - 19.486).abs() < 1e-3);
        let r = identity_rhs(SeriesIdentity::ExpShift { b: c(1.0, 0.0) }).unwrap();
        assert!((r.re - 0.920_673_6).abs() < 1e-7);
    }

    #[test]
    fn exclusions() {
        assert!(identity_rhs(SeriesIdentity::ExpShift { b: c(0.0, 0.0) }).is_err());
        assert!(identity_rhs(SeriesIdentity::Alt6139 { a: 1.0, b: 2.0 }).is_err());
        assert!(identity_lhs(
            SeriesIdentity::SqrtCube { c: c(2.0, 0.0) },
            Budget::default()
        )
        .is_err());
    }
}
