//! Zeros of polygamma functions and the inverse-power sums over them.

use num_complex::Complex64;

use super::bracket::real_zero_bracketed;
use super::handle::ZeroPoleRecord;
use super::rect::complex_zeros_in_rect;
use super::targets::polygamma_handle;
use crate::contour::RectRegion;
use crate::numerics::{digamma, polygamma, zeta_int};
use crate::report::IdentityPair;
use crate::series::SeriesResult;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

const EPS: f64 = 1e-9;
const ZERO_TOL: f64 = 1e-10;

fn real_polygamma(n: u32, x: f64) -> f64 {
    polygamma(n, Complex64::new(x, 0.0))
        .map(|v| v.re)
        .unwrap_or(f64::NAN)
}

/// Real zeros of `psi^(n)` in `(-k-1, -k)` for `k = 0..count`, where the
/// endpoint signs differ.
pub fn polygamma_ladder(n: u32, count: usize) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for k in 0..count {
        let lo = -(k as f64) - 1.0 + EPS;
        let hi = -(k as f64) - EPS;
        let (flo, fhi) = (real_polygamma(n, lo), real_polygamma(n, hi));
        if flo * fhi < 0.0 {
            out.push(real_zero_bracketed(
                |x| real_polygamma(n, x),
                lo,
                hi,
                1e-15,
            )?);
        }
    }
    Ok(out)
}

fn is_real(z: Complex64) -> bool {
    z.im.abs() <= 1e-8 * (1.0 + z.norm())
}

/// Real ladder zeros (from sign-change brackets) merged with the non-real
/// zeros found in `rect`, sorted by modulus.
pub fn polygamma_zeros(
    n: u32,
    real_count: usize,
    rect: &RectRegion,
) -> Result<Vec<ZeroPoleRecord>> {
    if n == 0 {
        return Err(Error::Precondition(
            "polygamma order must be at least 1".into(),
        ));
    }
    let scan = complex_zeros_in_rect(&polygamma_handle(n), rect, ZERO_TOL)?;
    if let Some((cell, count)) = scan.unresolved.first() {
        return Err(Error::Precondition(format!(
            "{count} zeros unresolved in {cell:?}"
        )));
    }
    let mut out: Vec<ZeroPoleRecord> = polygamma_ladder(n, real_count)?
        .into_iter()
        .map(|x| ZeroPoleRecord::zero(Complex64::new(x, 0.0), 1))
        .collect();
    // Real zeros off the negative ladder (none are expected) are kept.
    out.extend(
        scan.zeros
            .into_iter()
            .filter(|z| !is_real(z.location) || z.location.re > 0.0),
    );
    out.sort_by(|a, b| {
        a.location
            .norm()
            .total_cmp(&b.location.norm())
            .then(a.location.im.total_cmp(&b.location.im))
    });
    Ok(out)
}

/// Inverse-power sums over polygamma zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygammaIdentity {
    /// `sum (l/eta + (n+1)/k) = 0`.
    A,
    /// `sum l/eta^j = (-1)^j (n+1) zeta(j)` for `2 <= j <= n`.
    B { j: u32 },
    /// `sum l/eta^{n+1}`: `0` for odd `n`, `-2(n+1) zeta(n+1)` for even `n`.
    C,
}

impl PolygammaIdentity {
    fn power(self, n: u32) -> u32 {
        match self {
            PolygammaIdentity::A => 1,
            PolygammaIdentity::B { j } => j,
            PolygammaIdentity::C => n + 1,
        }
    }
}

/// Truncation of a polygamma zero sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygammaBudget {
    /// Number of ladder intervals `(-k-1, -k)` searched for real zeros.
    pub real_count: usize,
    /// Window searched for non-real zeros.
    pub rect: RectRegion,
}

/// Partial sum over the found zeros with its remainder model.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygammaSum {
    pub partial: Complex64,
    pub tail: Complex64,
    pub tail_bound: f64,
    pub zeros_used: usize,
    pub notes: Vec<String>,
}

/// `sum_{k>=K} sum_i (-1)^j / (k + w_i)^j` for zeros `eta = -(k + w_i)`,
/// paired with the pole weights `1/(k+1)` when `j = 1`.
fn ladder_tail(j: u32, big_k: usize, offsets: &[Complex64]) -> Result<Complex64> {
    let kk = big_k as f64;
    let mut t = Complex64::new(0.0, 0.0);
    for &w in offsets {
        t += if j == 1 {
            digamma(kk + w)? - digamma(Complex64::new(kk + 1.0, 0.0))?
        } else {
            let fact: f64 = (1..j).map(f64::from).product();
            polygamma(j - 1, kk + w)? / fact
        };
    }
    Ok(t)
}

/// Drift bound `sum_i K |w_i(K) - w_i(K-1)| / (j K^j)`, doubled.
fn drift_bound(j: u32, big_k: usize, last: &[Complex64], prev: &[Complex64]) -> f64 {
    let kk = big_k as f64;
    let drift: f64 = last.iter().zip(prev).map(|(a, b)| (a - b).norm()).sum();
    2.0 * kk * drift / (f64::from(j) * kk.powi(j as i32))
}

fn interval(z: Complex64) -> Option<usize> {
    (z.re < 0.0).then(|| (-z.re).floor() as usize)
}

fn offsets_in(zs: &[Complex64], k: usize) -> Vec<Complex64> {
    let mut w: Vec<Complex64> = zs
        .iter()
        .filter(|z| interval(**z) == Some(k))
        .map(|z| -z - k as f64)
        .collect();
    w.sort_by(|a, b| a.im.total_cmp(&b.im));
    w
}

/// Partial inverse-power sum over polygamma zeros with interval-wise
/// remainder models for the real ladder and the non-real zeros.
pub fn polygamma_zero_sum(n: u32, j: u32, budget: &PolygammaBudget) -> Result<PolygammaSum> {
    if n == 0 || j == 0 {
        return Err(Error::Precondition("n and j must be positive".into()));
    }
    let rect = budget.rect;
    let k_c = (-rect.x1).floor() as usize;
    if k_c < 2 || rect.x2 <= 0.0 {
        return Err(Error::Precondition("window must cover [-2, 0]".into()));
    }
    if budget.real_count < k_c {
        return Err(Error::Precondition(
            "real ladder must reach the left edge of the window".into(),
        ));
    }
    let ladder = polygamma_ladder(n, budget.real_count)?;
    let scan = complex_zeros_in_rect(&polygamma_handle(n), &rect, ZERO_TOL)?;
    let mut notes = Vec::new();
    if !scan.unresolved.is_empty() {
        notes.push(format!("{} unresolved cells", scan.unresolved.len()));
    }
    let mut complex: Vec<Complex64> = Vec::new();
    let mut extra: Vec<(Complex64, u32)> = Vec::new();
    for z in &scan.zeros {
        let loc = z.location;
        if is_real(loc) && loc.re < 0.0 {
            continue;
        }
        match interval(loc) {
            Some(k) if k < k_c => {
                for _ in 0..z.multiplicity {
                    complex.push(loc);
                }
            }
            Some(_) => {}
            None => extra.push((loc, z.multiplicity)),
        }
    }
    let per_interval = offsets_in(&complex, k_c - 1).len();
    for k in 0..k_c {
        let c = offsets_in(&complex, k).len();
        if c != per_interval {
            notes.push(format!(
                "interval {k} holds {c} non-real zeros, expected {per_interval}"
            ));
        }
    }

    let jj = j as i32;
    let mut s = CompensatedSum::new();
    for &x in &ladder {
        s.add(Complex64::new(x.powi(-jj), 0.0));
    }
    for &z in &complex {
        s.add(z.powi(-jj));
    }
    for &(z, m) in &extra {
        s.add(f64::from(m) * z.powi(-jj));
    }
    if j == 1 {
        let h = |k: usize| crate::numerics::harmonic(k as u64, 1);
        if !ladder.is_empty() {
            s.add(Complex64::new(h(budget.real_count), 0.0));
        }
        s.add(Complex64::new(per_interval as f64 * h(k_c), 0.0));
    }

    let real_w: Vec<Complex64> = ladder.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut tail = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    if !ladder.is_empty() {
        let kr = budget.real_count;
        let last = offsets_in(&real_w, kr - 1);
        let prev = offsets_in(&real_w, kr - 2);
        tail += ladder_tail(j, kr, &last)?;
        bound += drift_bound(j, kr, &last, &prev);
    }
    let last = offsets_in(&complex, k_c - 1);
    let prev = offsets_in(&complex, k_c - 2);
    tail += ladder_tail(j, k_c, &last)?;
    bound += drift_bound(j, k_c, &last, &prev);
    notes.push(format!(
        "{} ladder zeros, {} non-real zeros in {k_c} intervals",
        ladder.len(),
        complex.len()
    ));
    Ok(PolygammaSum {
        partial: s.value(),
        tail,
        tail_bound: bound,
        zeros_used: ladder.len() + complex.len() + extra.len(),
        notes,
    })
}

/// Right side of the polygamma zero-sum identities.
pub fn polygamma_identity_rhs(id: PolygammaIdentity, n: u32) -> Result<Complex64> {
    let j = id.power(n);
    let nn = f64::from(n + 1);
    let v = match id {
        PolygammaIdentity::A => 0.0,
        PolygammaIdentity::B { j } => {
            if j < 2 || j > n {
                return Err(Error::ExcludedParameter(format!("j = {j} outside 2..={n}")));
            }
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * nn * zeta_int(j)?
        }
        PolygammaIdentity::C => {
            if n % 2 == 1 {
                0.0
            } else {
                -2.0 * nn * zeta_int(j)?
            }
        }
    };
    Ok(Complex64::new(v, 0.0))
}

/// LHS (partial sum plus remainder model) and RHS of a polygamma identity.
pub fn polygamma_identity(
    id: PolygammaIdentity,
    n: u32,
    budget: &PolygammaBudget,
) -> Result<IdentityPair> {
    if n == 0 {
        return Err(Error::ExcludedParameter("n = 0".into()));
    }
    let rhs = polygamma_identity_rhs(id, n)?;
    let sum = polygamma_zero_sum(n, id.power(n), budget)?;
    let mut pair = IdentityPair::new(
        SeriesResult {
            value: sum.partial + sum.tail,
            abs_err_estimate: sum.tail_bound,
            terms_used: sum.zeros_used,
        },
        rhs,
    );
    pair.notes = sum.notes;
    pair.notes.push(format!(
        "partial {:.12} with remainder model {:.6e} applied",
        sum.partial, sum.tail
    ));
    Ok(pair)
}
