use std::f64::consts::PI;

use num_complex::Complex64;

use super::handle::FunctionHandle;
use super::levels::inverse_square_sum;
use super::rect::{complex_zeros_in_rect, ZeroScan};
use super::targets;
use crate::contour::RectRegion;
use crate::numerics::{a_coeff, b_coeff, ln_gamma, lower_incomplete_gamma, polygamma};
use crate::report::IdentityPair;
use crate::series::{lemma21_value, normalize_taylor, SeriesResult};
use crate::{Error, Result};

const SCAN_TOL: f64 = 1e-10;
const CAUCHY_POINTS: usize = 128;
const ASYMPTOTIC_BRANCHES: i64 = 4000;

/// Zero-sum identities of the incomplete gamma and zeta type functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IncompleteIdentity {
    /// Zeros in `z` of `z^{-s} gamma(s, z)` for fixed `s`.
    Eq32,
    /// Zeros in `z` of `(s - 1) z^{1-s} Q(s, z)` for fixed `s`, `|z| < 2 pi`.
    Eq35,
    /// Zeros in `s` of `s z^{-s} gamma(s, z)` for fixed `z`.
    Eq36,
    /// Zeros in `s` of `-2 z^{-s} s Q(s, z)` for fixed `0 < |z| < 2 pi`.
    Eq310,
}

impl IncompleteIdentity {
    pub const ALL: [IncompleteIdentity; 4] = [Self::Eq32, Self::Eq35, Self::Eq36, Self::Eq310];

    pub fn name(self) -> &'static str {
        match self {
            Self::Eq32 => "eq3.2",
            Self::Eq35 => "eq3.5",
            Self::Eq36 => "eq3.6",
            Self::Eq310 => "eq3.10",
        }
    }

    /// Whether the zeros are taken in the `s` plane.
    pub fn in_s(self) -> bool {
        matches!(self, Self::Eq36 | Self::Eq310)
    }

    fn handle(self, p: Complex64) -> FunctionHandle {
        match self {
            Self::Eq32 => targets::incomplete_gamma_in_z(p),
            Self::Eq35 => targets::incomplete_zeta_in_z(p),
            Self::Eq36 => targets::incomplete_gamma_in_s(p),
            Self::Eq310 => targets::incomplete_zeta_in_s(p),
        }
    }

    /// Radius of the Taylor circle around the origin.
    fn head_radius(self) -> f64 {
        match self {
            Self::Eq32 | Self::Eq35 => 1.0,
            Self::Eq36 | Self::Eq310 => 0.5,
        }
    }

    /// Inverse-square sum over the poles, moved to the right-hand side.
    fn pole_constant(self) -> f64 {
        match self {
            Self::Eq32 | Self::Eq35 => 0.0,
            Self::Eq36 => PI * PI / 6.0,
            Self::Eq310 => 1.0 + PI * PI / 8.0,
        }
    }
}

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

fn check(id: IncompleteIdentity, p: Complex64) -> Result<()> {
    let bad = match id {
        IncompleteIdentity::Eq32 => is_nonpositive_integer(p),
        IncompleteIdentity::Eq35 => is_nonpositive_integer(p) || p == Complex64::new(1.0, 0.0),
        IncompleteIdentity::Eq36 => p.norm() == 0.0 || !p.is_finite(),
        IncompleteIdentity::Eq310 => p.norm() == 0.0 || !(p.norm() < 2.0 * PI),
    };
    if bad || !p.is_finite() {
        return Err(Error::ExcludedParameter(format!("{} at {p}", id.name())));
    }
    Ok(())
}

/// Closed-form right-hand side.
pub fn incomplete_identity_rhs(id: IncompleteIdentity, p: Complex64) -> Result<Complex64> {
    check(id, p)?;
    let one = Complex64::new(1.0, 0.0);
    Ok(match id {
        IncompleteIdentity::Eq32 => p * p / ((p + one) * (p + one)) - p / (p + 2.0),
        IncompleteIdentity::Eq35 => {
            (p - one) * (p - one) / (4.0 * p * p) - (p - one) / (6.0 * (p + one))
        }
        IncompleteIdentity::Eq36 => {
            let a1 = a_coeff(1, p)?;
            a1 * a1 - 2.0 * a_coeff(2, p)? + id.pole_constant()
        }
        IncompleteIdentity::Eq310 => {
            let b1 = b_coeff(1, p)?;
            4.0 * b1 * b1 / (p * p) - 4.0 * b_coeff(2, p)? / p + id.pole_constant()
        }
    })
}

/// First three Taylor coefficients at the origin from the trapezoid rule on
/// a circle of radius `r`.
fn taylor_heads(handle: &FunctionHandle, r: f64, points: usize) -> [Complex64; 3] {
    let mut c = [Complex64::new(0.0, 0.0); 3];
    for j in 0..points {
        let w = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / points as f64);
        let f = handle.eval(w * r);
        let wi = w.inv();
        c[0] += f;
        c[1] += f * wi;
        c[2] += f * wi * wi;
    }
    let n = points as f64;
    [c[0] / n, c[1] / (n * r), c[2] / (n * r * r)]
}

/// The inverse-square lemma applied to Taylor heads read off the function itself, plus the
/// pole contribution of the identity.
pub fn incomplete_algebraic(id: IncompleteIdentity, p: Complex64) -> Result<SeriesResult> {
    check(id, p)?;
    let handle = id.handle(p);
    let value = |points| -> Result<Complex64> {
        let [c0, c1, c2] = taylor_heads(&handle, id.head_radius(), points);
        if !(c0.is_finite() && c1.is_finite() && c2.is_finite()) {
            return Err(Error::Domain(format!(
                "{} heads not finite at {p}",
                id.name()
            )));
        }
        Ok(lemma21_value(normalize_taylor(c0, c1, c2)?) + id.pole_constant())
    };
    let fine = value(CAUCHY_POINTS)?;
    let coarse = value(CAUCHY_POINTS / 2)?;
    Ok(SeriesResult {
        value: fine,
        abs_err_estimate: (fine - coarse).norm(),
        terms_used: CAUCHY_POINTS,
    })
}

/// Rectangle scanned by the enumeration route when none is configured.
pub fn default_window(id: IncompleteIdentity, p: Complex64) -> RectRegion {
    let m = p.norm();
    let r = match id {
        IncompleteIdentity::Eq32 => RectRegion::new(-25.0 - m, 25.0 + m, -50.0 - m, 50.0 + m),
        IncompleteIdentity::Eq35 => RectRegion::new(-4.2, 4.3, -4.1, 4.4),
        IncompleteIdentity::Eq36 => {
            let n = (4.0 * m).ceil().max(25.0);
            RectRegion::new(-n - 0.5, 4.0 + m, -4.0 - 2.0 * m, 4.1 + 2.0 * m)
        }
        IncompleteIdentity::Eq310 => RectRegion::new(-26.0, 3.7, -4.0 - m, 4.1 + m),
    };
    r.expect("window bounds are ordered")
}

/// Truncated zero sum over a window together with its tail model.
#[derive(Debug, Clone)]
pub struct IncompleteEnumeration {
    pub sum: SeriesResult,
    pub window: RectRegion,
    pub window_zeros: usize,
    pub unresolved: usize,
    pub tail: Complex64,
    pub notes: Vec<String>,
}

fn scan_total(scan: &ZeroScan) -> usize {
    scan.zeros
        .iter()
        .map(|r| r.multiplicity as usize)
        .sum::<usize>()
        + scan
            .unresolved
            .iter()
            .map(|(_, c)| *c as usize)
            .sum::<usize>()
}

/// Zeros of `z^{-s} gamma(s, z)` beyond the window, one per branch `k`,
/// seeded by `Gamma(s, z) = Gamma(s)` asymptotics and polished by Newton.
fn eq32_tail(s: Complex64, window: &RectRegion) -> Result<(Complex64, f64, usize)> {
    let lg = ln_gamma(s)?;
    let one = Complex64::new(1.0, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    let mut used = 0;
    for sign in [1.0, -1.0] {
        let mut prev: Option<Complex64> = None;
        for k in 1..=ASYMPTOTIC_BRANCHES {
            let shift = Complex64::new(0.0, sign * 2.0 * PI * k as f64);
            let mut z = shift;
            for _ in 0..30 {
                let head = one + (s - one) / z + (s - one) * (s - 2.0) / (z * z);
                z = (s - one) * z.ln() + head.ln() - lg + shift;
            }
            for _ in 0..20 {
                let f = lower_incomplete_gamma(s, z)?;
                let df = ((-z).exp() - s * f) / z;
                let step = f / df;
                z -= step;
                if step.norm() < 1e-14 * z.norm() {
                    break;
                }
            }
            let resid = lower_incomplete_gamma(s, z)?.norm();
            let scale = (lg.re - s.re * z.norm().ln()).exp().max(1e-300);
            if !(resid < 1e-8 * scale) {
                return Err(Error::NonConvergence { terms: k as usize });
            }
            if let Some(q) = prev {
                if (z - q).norm() < 1.0 {
                    return Err(Error::Precondition(format!(
                        "asymptotic branches {} and {} merged near {z}",
                        k - 1,
                        k
                    )));
                }
            }
            prev = Some(z);
            if window.contains(z) {
                continue;
            }
            total += (z * z).inv();
            used += 1;
        }
    }
    // Beyond |k| = K both branches give -1/(2 pi k)^2 to leading order.
    let kk = ASYMPTOTIC_BRANCHES as f64;
    let rest = -1.0 / (2.0 * PI * PI * (kk + 0.5));
    let rel = 2.0 * ((s - one).norm() * (2.0 * PI * kk).ln() + s.norm() + 1.0) / (PI * kk);
    Ok((total + rest, rest.abs() * rel, used))
}

/// Pole-tracking tail for the `s`-plane identities: each pole beyond the
/// window carries a zero at distance `delta_n`, shrinking by `ratio` per pole.
fn pole_tail(
    scan: &ZeroScan,
    last_pole: f64,
    next_pole: f64,
    ratio: f64,
    sum_beyond: f64,
) -> (Complex64, f64, Option<f64>) {
    let target = Complex64::new(last_pole, 0.0);
    let delta = scan
        .zeros
        .iter()
        .map(|r| (r.location - target).norm())
        .chain(
            scan.unresolved
                .iter()
                .map(|(c, _)| (c.center() - target).norm() + c.diameter()),
        )
        .fold(f64::INFINITY, f64::min);
    if !(delta < 0.5) || !(ratio < 1.0) {
        return (Complex64::new(sum_beyond, 0.0), f64::INFINITY, None);
    }
    let bound = 4.0 * delta * ratio / ((1.0 - ratio) * next_pole.abs().powi(3));
    (Complex64::new(sum_beyond, 0.0), bound, Some(delta))
}

/// Enumeration route: zeros found in `window`, plus the tail model of the
/// identity beyond it.
pub fn incomplete_enumeration(
    id: IncompleteIdentity,
    p: Complex64,
    window: &RectRegion,
) -> Result<IncompleteEnumeration> {
    check(id, p)?;
    if id == IncompleteIdentity::Eq35 {
        let reach = window
            .corners()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        if !(reach < 2.0 * PI) {
            return Err(Error::Precondition(format!(
                "window reaches |z| = {reach}, beyond the 2 pi series disc"
            )));
        }
    }
    let scan = complex_zeros_in_rect(&id.handle(p), window, SCAN_TOL)?;
    let (raw, unresolved_bound) = inverse_square_sum(&scan);
    let mut notes = Vec::new();
    if !scan.unresolved.is_empty() {
        notes.push(format!(
            "{} unresolved cells counted at their centers",
            scan.unresolved.len()
        ));
    }
    let (tail, tail_bound) = match id {
        IncompleteIdentity::Eq32 => {
            let (t, b, used) = eq32_tail(p, window)?;
            notes.push(format!("{used} asymptotic zeros beyond the window"));
            (t, b)
        }
        IncompleteIdentity::Eq35 => {
            notes.push("no tail model: zeros beyond |z| = 2 pi are not enumerated".into());
            (Complex64::new(0.0, 0.0), f64::INFINITY)
        }
        IncompleteIdentity::Eq36 => {
            let n = (-window.x1).floor();
            let ratio = p.norm() / (n + 1.0);
            let (t, b, delta) = pole_tail(
                &scan,
                -n,
                -(n + 1.0),
                ratio,
                polygamma(1, Complex64::new(n + 1.0, 0.0))?.re,
            );
            if let Some(d) = delta {
                notes.push(format!("pole offset {d:.3e} at s = -{n}"));
            }
            (t, b)
        }
        IncompleteIdentity::Eq310 => {
            // Odd poles -1, -3, ..., -(2m - 1) lie inside the window.
            let m = ((-window.x1 + 1.0) / 2.0).floor();
            let last = -(2.0 * m - 1.0);
            let ratio = (p.norm() / (2.0 * PI)).powi(2);
            let beyond = 0.25 * polygamma(1, Complex64::new(m + 0.5, 0.0))?.re;
            let (t, b, delta) = pole_tail(&scan, last, last - 2.0, ratio, beyond);
            if let Some(d) = delta {
                notes.push(format!("pole offset {d:.3e} at s = {last}"));
            }
            (t, b)
        }
    };
    Ok(IncompleteEnumeration {
        sum: SeriesResult {
            value: raw + tail,
            abs_err_estimate: tail_bound + unresolved_bound,
            terms_used: scan_total(&scan),
        },
        window: *window,
        window_zeros: scan.zeros.len(),
        unresolved: scan.unresolved.len(),
        tail,
        notes,
    })
}

/// Both routes of an incomplete-function zero sum against the closed form.
#[derive(Debug, Clone)]
pub struct IncompleteSums {
    pub id: IncompleteIdentity,
    pub param: Complex64,
    pub rhs: Complex64,
    pub algebraic: SeriesResult,
    pub enumeration: Option<IncompleteEnumeration>,
}

impl IncompleteSums {
    pub fn algebraic_pair(&self) -> IdentityPair {
        IdentityPair::new(self.algebraic, self.rhs).note("inverse-square lemma on Taylor heads")
    }

    pub fn enumeration_pair(&self) -> Option<IdentityPair> {
        self.enumeration.as_ref().map(|e| {
            let mut pair = IdentityPair::new(e.sum, self.rhs).note(format!(
                "{} zeros in window, tail {:.6e}",
                e.window_zeros, e.tail
            ));
            pair.notes.extend(e.notes.iter().cloned());
            pair
        })
    }
}

/// Right-hand side plus the algebraic route, and the enumeration route when
/// a window is supplied.
pub fn incomplete_zero_sums(
    id: IncompleteIdentity,
    p: Complex64,
    window: Option<&RectRegion>,
) -> Result<IncompleteSums> {
    let rhs = incomplete_identity_rhs(id, p)?;
    let algebraic = incomplete_algebraic(id, p)?;
    let enumeration = match window {
        Some(w) => Some(incomplete_enumeration(id, p, w)?),
        None => None,
    };
    Ok(IncompleteSums {
        id,
        param: p,
        rhs,
        algebraic,
        enumeration,
    })
}
