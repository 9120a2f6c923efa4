use num_complex::Complex64;

use crate::numerics::{euler_gamma, gamma, zeta_int};
use crate::{Error, Result};

/// Normalized head `f(z) = 1 + a1 z + a2 z^2 + O(z^3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorHead {
    pub a1: Complex64,
    pub a2: Complex64,
}

/// Divides the first three Taylor coefficients by the constant term.
pub fn normalize_taylor(c0: Complex64, c1: Complex64, c2: Complex64) -> Result<TaylorHead> {
    if c0 == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(TaylorHead {
        a1: c1 / c0,
        a2: c2 / c0,
    })
}

/// `a1^2 - 2 a2`, the inverse-square sum over zeros minus poles.
pub fn lemma21_value(head: TaylorHead) -> Complex64 {
    head.a1 * head.a1 - 2.0 * head.a2
}

/// Entries of the zero-sum catalog.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatalogFunction {
    /// `e^z - a - z - z^2/2`, `a != 1`.
    ExpMinusAZZ2 { a: Complex64 },
    /// `e^z - 2z`.
    ExpMinus2Z,
    /// `sin z - a - z`, `a != 0`.
    SinMinusAZ { a: Complex64 },
    /// `cos z - a + s z^2/2` with the sign `s` adjudicated.
    CosMinusAQuad { a: Complex64 },
    /// Bessel level set `N z^{-alpha} J_alpha(z) - a + z^2/(4 Gamma(2+alpha))`
    /// with the normalization `N` adjudicated.
    BesselNormalized { alpha: f64, a: Complex64 },
    /// `z (Gamma(z) - a)`; poles at `-1, -2, ...` are added back.
    GammaLevel { a: Complex64 },
}

/// Catalog value with the variant actually used and the printed variant's value.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogValue {
    pub value: Complex64,
    pub variant: &'static str,
    pub printed_value: Complex64,
}

fn exclude(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Err(Error::ExcludedParameter(msg.into()))
    } else {
        Ok(())
    }
}

fn near(a: Complex64, b: f64) -> bool {
    (a - b).norm() < 1e-14
}

/// Sum of `k_i / rho_i^2` over the solutions of a catalog equation.
pub fn catalog_zero_sum(f: CatalogFunction) -> Result<CatalogValue> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let plain = |value: Complex64, variant| CatalogValue {
        value,
        variant,
        printed_value: value,
    };
    match f {
        CatalogFunction::ExpMinusAZZ2 { a } => {
            exclude(near(a, 1.0), "a = 1")?;
            // 1 - a + (1 - 1) z + (1/2 - 1/2) z^2 + z^3/6
            let h = normalize_taylor(one - a, zero, zero)?;
            Ok(plain(lemma21_value(h), "printed"))
        }
        CatalogFunction::ExpMinus2Z => {
            let h = normalize_taylor(one, -one, 0.5 * one)?;
            Ok(plain(lemma21_value(h), "printed"))
        }
        CatalogFunction::SinMinusAZ { a } => {
            exclude(near(a, 0.0), "a = 0")?;
            let h = normalize_taylor(-a, zero, zero)?;
            Ok(plain(lemma21_value(h), "printed"))
        }
        CatalogFunction::CosMinusAQuad { a } => {
            exclude(near(a, 1.0), "a = 1")?;
            let printed = lemma21_value(normalize_taylor(one - a, zero, -one)?);
            let plus = lemma21_value(normalize_taylor(one - a, zero, zero)?);
            Ok(pick(
                &[("-z^2/2 (printed)", printed), ("+z^2/2", plus)],
                printed,
            ))
        }
        CatalogFunction::BesselNormalized { alpha, a } => {
            exclude(near(a, 1.0), "a = 1")?;
            exclude(
                alpha < 0.0 && alpha.fract() == 0.0,
                "alpha is a negative integer",
            )?;
            let al = Complex64::new(alpha, 0.0);
            let g1 = gamma(al + 1.0)?;
            let g2 = gamma(al + 2.0)?;
            let scale = 2f64.powf(alpha) * g1;
            // z^{-alpha} J_alpha(z) = (1 - z^2/(4(1+alpha)) + ...) / scale
            let quad = 0.25 / g2;
            let curv = -0.25 / (1.0 + al);
            let printed = lemma21_value(normalize_taylor(
                1.0 / scale - a,
                zero,
                curv / scale + quad,
            )?);
            let raw_exact = lemma21_value(normalize_taylor(
                1.0 / scale - a,
                zero,
                curv / scale + 0.25 / (scale * (1.0 + al)),
            )?);
            let normalized =
                lemma21_value(normalize_taylor(one - a, zero, curv + 0.25 / (1.0 + al))?);
            Ok(pick(
                &[
                    ("z^-a J_a - a + z^2/(4 Gamma(2+a)) (printed)", printed),
                    ("z^-a J_a - a + z^2/(2^(a+2) Gamma(2+a))", raw_exact),
                    ("2^a Gamma(1+a) z^-a J_a - a + z^2/(4(1+a))", normalized),
                ],
                printed,
            ))
        }
        CatalogFunction::GammaLevel { a } => {
            let g = euler_gamma();
            let h = normalize_taylor(one, -(g + a), (0.5 * g * g + 0.5 * zeta_int(2)?).into())?;
            let v = lemma21_value(h) + zeta_int(2)?;
            Ok(plain(v, "printed"))
        }
    }
}

fn pick(variants: &[(&'static str, Complex64)], printed: Complex64) -> CatalogValue {
    let (variant, value) = variants
        .iter()
        .copied()
        .find(|(_, v)| v.norm() < 1e-14)
        .unwrap_or(variants[0]);
    CatalogValue {
        value,
        variant,
        printed_value: printed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn normalize_examples() {
        let h = normalize_taylor(c(1.0), c(-1.0), c(0.5)).unwrap();
        assert_eq!((h.a1, h.a2), (c(-1.0), c(0.5)));
        let h = normalize_taylor(c(2.0), c(0.0), c(1.0)).unwrap();
        assert_eq!((h.a1, h.a2), (c(0.0), c(0.5)));
        assert_eq!(
            normalize_taylor(c(0.0), c(1.0), c(1.0)),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn cos_head_gives_pi_squared() {
        let v = lemma21_value(TaylorHead {
            a1: c(0.0),
            a2: c(-PI * PI / 2.0),
        });
        assert!((v.re - PI * PI).abs() < 1e-14);
    }

    #[test]
    fn catalog_sign_adjudication() {
        let v = catalog_zero_sum(CatalogFunction::CosMinusAQuad { a: c(0.3) }).unwrap();
        assert_eq!(v.variant, "+z^2/2");
        assert!(v.printed_value.norm() > 1.0);
        let b = catalog_zero_sum(CatalogFunction::BesselNormalized {
            alpha: 1.5,
            a: c(0.2),
        })
        .unwrap();
        assert!(b.value.norm() < 1e-14);
        assert!(b.printed_value.norm() > 1e-3);
    }

    #[test]
    fn gamma_level_amusing_zero() {
        let a = c(-2.0 * euler_gamma());
        let v = catalog_zero_sum(CatalogFunction::GammaLevel { a }).unwrap();
        assert!(v.value.norm() < 1e-14);
    }
}
