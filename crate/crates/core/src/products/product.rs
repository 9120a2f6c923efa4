use num_complex::Complex64;

use super::poly::{poly_roots, root_multiplicities, InverseZPolynomial};
use crate::numerics::{gamma, ln_gamma};
use crate::series::SeriesResult;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

fn roots_or_empty(p: &InverseZPolynomial) -> Result<Vec<Complex64>> {
    if p.degree() == 0 {
        Ok(Vec::new())
    } else {
        poly_roots(p)
    }
}

fn positive_integer(r: Complex64) -> Option<u64> {
    let k = r.re.round();
    if k >= 1.0 && (r - k).norm() < 1e-9 * k.max(1.0) {
        Some(k as u64)
    } else {
        None
    }
}

fn check_leading(p: &InverseZPolynomial, q: &InverseZPolynomial) -> Result<()> {
    let (a1, b1) = (p.coeff(1), q.coeff(1));
    if (a1 - b1).norm() > 1e-12 * (1.0 + a1.norm()) {
        return Err(Error::Precondition(format!(
            "a_1 = {a1} differs from b_1 = {b1}"
        )));
    }
    Ok(())
}

fn reject_integer_roots(roots: &[Complex64], which: &str) -> Result<()> {
    if let Some(k) = roots.iter().find_map(|&r| positive_integer(r)) {
        return Err(Error::Precondition(format!(
            "{which} has the positive integer root {k}"
        )));
    }
    Ok(())
}

fn sum_ln_gamma_one_minus(roots: &[Complex64]) -> Result<Complex64> {
    let mut acc = CompensatedSum::new();
    for &r in roots {
        acc.add(ln_gamma(1.0 - r)?);
    }
    Ok(acc.value())
}

/// `prod Gamma(1 - s_i) / prod Gamma(1 - r_i)` for explicit root lists.
pub fn closed_form_from_roots(r: &[Complex64], s: &[Complex64]) -> Result<Complex64> {
    reject_integer_roots(r, "P")?;
    reject_integer_roots(s, "Q")?;
    Ok((sum_ln_gamma_one_minus(s)? - sum_ln_gamma_one_minus(r)?).exp())
}

/// `prod_{n>=1} P(n)/Q(n)` in closed form.
pub fn product_closed_form(p: &InverseZPolynomial, q: &InverseZPolynomial) -> Result<Complex64> {
    check_leading(p, q)?;
    closed_form_from_roots(&roots_or_empty(p)?, &roots_or_empty(q)?)
}

/// The equivalent form `b_q prod Gamma(-s_i) / (a_p prod Gamma(-r_i))`.
pub fn product_mathworld_form(p: &InverseZPolynomial, q: &InverseZPolynomial) -> Result<Complex64> {
    check_leading(p, q)?;
    let r = roots_or_empty(p)?;
    let s = roots_or_empty(q)?;
    reject_integer_roots(&r, "P")?;
    reject_integer_roots(&s, "Q")?;
    let mut num = q.coeff(q.degree());
    for &x in &s {
        num *= gamma(-x)?;
    }
    let mut den = p.coeff(p.degree());
    for &x in &r {
        den *= gamma(-x)?;
    }
    Ok(num / den)
}

/// `prod_{n>=1, n != k}` with `k` a simple root of `P`:
/// `(-1)^{k-1} k^{p-q} (k-1)! prod (k - s_i) Gamma(1 - s_i) / prod_{i>=2} (k - r_i) Gamma(1 - r_i)`.
pub fn product_with_integer_root(
    p: &InverseZPolynomial,
    q: &InverseZPolynomial,
    k: u64,
) -> Result<Complex64> {
    check_leading(p, q)?;
    let r = roots_or_empty(p)?;
    let s = roots_or_empty(q)?;
    integer_root_from_roots(&r, &s, k)
}

/// [`product_with_integer_root`] for explicit root lists.
pub fn integer_root_from_roots(r: &[Complex64], s: &[Complex64], k: u64) -> Result<Complex64> {
    if k == 0 {
        return Err(Error::Precondition("k must be a positive integer".into()));
    }
    let kc = Complex64::new(k as f64, 0.0);
    let hits: Vec<usize> = (0..r.len())
        .filter(|&i| positive_integer(r[i]) == Some(k))
        .collect();
    if hits.len() != 1 {
        return Err(Error::Precondition(format!(
            "{k} must be a simple root of P (found {} copies)",
            hits.len()
        )));
    }
    let others: Vec<Complex64> = (0..r.len())
        .filter(|&i| i != hits[0])
        .map(|i| r[i])
        .collect();
    reject_integer_roots(&others, "P")?;
    reject_integer_roots(s, "Q")?;
    let mut log = CompensatedSum::new();
    for &x in s {
        log.add((kc - x).ln());
        log.add(ln_gamma(1.0 - x)?);
    }
    for &x in &others {
        log.add(-(kc - x).ln());
        log.add(-ln_gamma(1.0 - x)?);
    }
    let pq = r.len() as f64 - s.len() as f64;
    log.add((pq * (k as f64).ln()).into());
    log.add(ln_gamma(kc)?);
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * log.value().exp())
}

/// `ln(1 + u)` accurate for small `u`.
fn ln_1p(u: Complex64) -> Complex64 {
    let re = 0.5 * (2.0 * u.re + u.norm_sqr()).ln_1p();
    Complex64::new(re, u.im.atan2(1.0 + u.re))
}

/// `sum_{n>N} n^{-k}` by Euler–Maclaurin, `k >= 2`.
fn zeta_tail(k: i32, n: f64) -> f64 {
    let kf = k as f64;
    n.powi(1 - k) / (kf - 1.0) - 0.5 * n.powi(-k) + kf * n.powi(-k - 1) / 12.0
        - kf * (kf + 1.0) * (kf + 2.0) * n.powi(-k - 3) / 720.0
}

/// `prod_{n<=N, n != skip} P(n)/Q(n)` accumulated in log space, with the
/// tail `prod_{n>N}` supplied by the log-coefficient expansion.
pub fn partial_product(
    p: &InverseZPolynomial,
    q: &InverseZPolynomial,
    n_max: u64,
    skip: Option<u64>,
) -> Result<SeriesResult> {
    if n_max == 0 {
        return Ok(SeriesResult {
            value: Complex64::new(1.0, 0.0),
            abs_err_estimate: f64::INFINITY,
            terms_used: 0,
        });
    }
    let mut acc = CompensatedSum::new();
    let mut used = 0;
    for n in 1..=n_max {
        if skip == Some(n) {
            continue;
        }
        let z = Complex64::new(n as f64, 0.0);
        let (pn, qn) = (p.eval(z), q.eval(z));
        if pn.norm() < 1e-14 || qn.norm() < 1e-14 {
            return Err(Error::Precondition(format!("zero factor at n = {n}")));
        }
        acc.add(ln_1p(pn - 1.0) - ln_1p(qn - 1.0));
        used += 1;
    }
    const ORDER: usize = 6;
    let lp = p.log_coeffs(ORDER + 1);
    let lq = q.log_coeffs(ORDER + 1);
    let nf = n_max as f64;
    let balanced = (lp[1] - lq[1]).norm() <= 1e-12 * (1.0 + lp[1].norm());
    let mut tail = Complex64::new(0.0, 0.0);
    if balanced {
        for k in 2..=ORDER {
            tail += (lp[k] - lq[k]) * zeta_tail(k as i32, nf);
        }
    }
    let value = (acc.value() + tail).exp();
    let bound = p.root_bound().max(q.root_bound());
    let next = (lp[ORDER + 1] - lq[ORDER + 1]).norm() * zeta_tail(ORDER as i32 + 1, nf);
    let abs_err_estimate = if !balanced || nf < 2.0 * bound {
        f64::INFINITY
    } else {
        value.norm() * (next + 1e-16 * used as f64)
    };
    Ok(SeriesResult {
        value,
        abs_err_estimate,
        terms_used: used,
    })
}

/// Distinct roots paired with multiplicities, for reporting.
pub fn factorization(p: &InverseZPolynomial) -> Result<Vec<(Complex64, usize)>> {
    Ok(root_multiplicities(&roots_or_empty(p)?))
}
