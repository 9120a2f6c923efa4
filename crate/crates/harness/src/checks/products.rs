use littlewood::products::{
    closed_form_from_roots, integer_root_from_roots, partial_product, product_closed_form,
    product_mathworld_form, product_with_integer_root, InverseZPolynomial,
};
use littlewood::Complex64;

use super::{real, Outcome};
use crate::params::Params;

/// Root lists `r = [r1, r2]` and `s = [s1, r1 + r2 - s1]`, which keeps the
/// first inverse-power coefficients equal.
fn balanced_roots(ps: &Params, r1: Complex64) -> (Vec<Complex64>, Vec<Complex64>) {
    let r2 = ps.complex("r2");
    let s1 = ps.complex("s1");
    (vec![r1, r2], vec![s1, r1 + r2 - s1])
}

fn poly_pair(
    r: &[Complex64],
    s: &[Complex64],
) -> littlewood::Result<(InverseZPolynomial, InverseZPolynomial)> {
    Ok((
        InverseZPolynomial::from_roots(r)?,
        InverseZPolynomial::from_roots(s)?,
    ))
}

pub fn general(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let (r, s) = balanced_roots(ps, ps.complex("r1"));
    let (p, q) = poly_pair(&r, &s)?;
    let lhs = partial_product(&p, &q, ps.int("n_max"), None)?;
    let rhs = closed_form_from_roots(&r, &s)?;
    Ok(Outcome::series(lhs, rhs).note(format!("s2 = {}", s[1])))
}

pub fn mathworld(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let (r, s) = balanced_roots(ps, ps.complex("r1"));
    let (p, q) = poly_pair(&r, &s)?;
    Ok(Outcome::new(
        product_mathworld_form(&p, &q)?,
        product_closed_form(&p, &q)?,
    ))
}

pub fn integer_root(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let k = ps.int("k");
    let (r, s) = balanced_roots(ps, real(k as f64));
    let (p, q) = poly_pair(&r, &s)?;
    let lhs = partial_product(&p, &q, ps.int("n_max"), Some(k))?;
    let rhs = integer_root_from_roots(&r, &s, k)?;
    Ok(Outcome::series(lhs, rhs))
}

fn coeff_list(raw: &str) -> littlewood::Result<Vec<f64>> {
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| littlewood::Error::Precondition(format!("bad coefficient `{t}`")))
        })
        .collect()
}

pub fn integer_root_poly(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let p = InverseZPolynomial::from_real(&coeff_list(ps.text("p"))?)?;
    let q = InverseZPolynomial::from_real(&coeff_list(ps.text("q"))?)?;
    let k = ps.int("k");
    let lhs = partial_product(&p, &q, ps.int("n_max"), Some(k))?;
    let rhs = product_with_integer_root(&p, &q, k)?;
    Ok(Outcome::series(lhs, rhs))
}

pub fn square_root_k(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let k = ps.int("k");
    let kf = k as f64;
    let p = InverseZPolynomial::from_real(&[1.0, 0.0, -kf * kf])?;
    let q = InverseZPolynomial::one();
    let lhs = partial_product(&p, &q, ps.int("n_max"), Some(k))?;
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    let rhs = real(0.5 * sign);
    let general = product_with_integer_root(&p, &q, k)?;
    Ok(Outcome::series(lhs, rhs).note(format!(
        "general integer-root formula off by {:.3e}",
        (general - rhs).norm()
    )))
}
