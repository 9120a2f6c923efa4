//! Adaptive quadrature for complex-valued integrands of a real parameter.

use num_complex::Complex64;

use crate::{Error, Result};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

/// One 15-point Kronrod panel with its embedded 7-point Gauss estimate.
pub fn gauss_kronrod<F>(f: &mut F, a: f64, b: f64) -> (Complex64, f64)
where
    F: FnMut(f64) -> Complex64,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        kron += s * WGK[j];
        if j % 2 == 1 {
            gauss += s * WG[j / 2];
        }
    }
    (kron * h, ((kron - gauss) * h).norm())
}

/// Globally adaptive Gauss–Kronrod integration of `f` over `[a, b]`.
///
/// Subdivides the panel with the largest error until the summed error
/// estimate drops below `max(abs_tol, rel_tol * |I|)`.
pub fn integrate<F>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Result<Quadrature>
where
    F: FnMut(f64) -> Complex64,
{
    let mut panels: Vec<(f64, f64, Complex64, f64)> = Vec::new();
    let (v, e) = gauss_kronrod(&mut f, a, b);
    panels.push((a, b, v, e));
    let mut evaluations = 15;
    loop {
        let total: Complex64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(Error::QuadratureBudget(f64::INFINITY));
        }
        if err <= abs_tol.max(rel_tol * total.norm()) {
            return Ok(Quadrature {
                value: total,
                error: err,
                evaluations,
            });
        }
        if panels.len() >= max_panels {
            return Err(Error::QuadratureBudget(err));
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty");
        let (lo, hi, _, _) = panels.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval exhausted at machine precision; accept what we have.
            let total: Complex64 = panels.iter().map(|p| p.2).sum::<Complex64>();
            let (v, e) = gauss_kronrod(&mut f, lo, hi);
            return Ok(Quadrature {
                value: total + v,
                error: err.max(e),
                evaluations,
            });
        }
        let (v1, e1) = gauss_kronrod(&mut f, lo, mid);
        let (v2, e2) = gauss_kronrod(&mut f, mid, hi);
        evaluations += 30;
        panels.push((lo, mid, v1, e1));
        panels.push((mid, hi, v2, e2));
    }
}

/// Tanh–sinh (double exponential) rule on `[0, 1]`, robust against
/// integrable endpoint singularities such as `ln v` at `v = 0`.
pub fn tanh_sinh_unit<F>(mut f: F, tol: f64) -> Quadrature
where
    F: FnMut(f64) -> Complex64,
{
    use std::f64::consts::FRAC_PI_2;
    // x = (1 + tanh(pi/2 sinh t)) / 2 on t in [-T, T].
    let node = |t: f64| {
        let u = FRAC_PI_2 * t.sinh();
        let ch = u.cosh();
        // 1 - x and x computed without cancellation.
        let e = (-2.0 * u.abs()).exp();
        let small = e / (1.0 + e);
        let (x, one_minus) = if u >= 0.0 {
            (1.0 - small, small)
        } else {
            (small, 1.0 - small)
        };
        let w = 0.5 * FRAC_PI_2 * t.cosh() / (ch * ch);
        (x, one_minus, w)
    };
    let t_max = 3.2;
    let mut h = 0.5;
    let eval = |t: f64, f: &mut F| -> Complex64 {
        let (x, om, w) = node(t);
        if x <= 0.0 || om <= 0.0 || w == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        f(x) * w
    };
    let mut sum = eval(0.0, &mut f);
    let mut k = 1;
    while (k as f64) * h <= t_max {
        let t = k as f64 * h;
        sum += eval(t, &mut f) + eval(-t, &mut f);
        k += 1;
    }
    let mut prev = sum * h;
    let mut evaluations = 2 * k;
    for _ in 0..8 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= t_max {
            let t = k as f64 * h;
            sum += eval(t, &mut f) + eval(-t, &mut f);
            k += 2;
        }
        evaluations += k;
        let cur = sum * h;
        let err = (cur - prev).norm();
        prev = cur;
        if err <= tol * cur.norm().max(1e-300) {
            return Quadrature {
                value: cur,
                error: err,
                evaluations,
            };
        }
    }
    Quadrature {
        value: prev,
        error: f64::NAN,
        evaluations,
    }
}
