use std::f64::consts::PI;

use littlewood::numerics::{
    a_coeff, b_coeff, b_coeff_recursion, b_coeff_series, bernoulli_over_factorial, ein,
    euler_gamma, incomplete_zeta_q, lower_incomplete_gamma, stieltjes, MAX_BERNOULLI,
};
use littlewood::quad::tanh_sinh_unit;
use littlewood::zeros::{
    default_window, incomplete_zero_sums, parse_zeta_zeros, zeta_zero_sum, IncompleteIdentity,
};
use littlewood::{Complex64, Error};

use super::Outcome;
use crate::params::Params;

const ZETA_TABLE: &str = include_str!("../../../../data/zeta_zeros_100.txt");
const QUAD_TOL: f64 = 1e-14;

fn taylor_sum(mut term: impl FnMut(u32) -> Complex64, max: u32) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..=max {
        let t = term(n);
        acc += t;
        if n > 8 && t.norm() < 1e-18 * acc.norm() {
            break;
        }
    }
    acc
}

pub fn gamma_series(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let (s, z) = (ps.complex("s"), ps.complex("z"));
    let mut pow = Complex64::new(1.0, 0.0);
    let lhs = taylor_sum(
        |n| {
            if n > 0 {
                pow *= -z / f64::from(n);
            }
            pow / (s + f64::from(n))
        },
        400,
    );
    Ok(Outcome::new(lhs, lower_incomplete_gamma(s, z)?).note("direct Taylor sum"))
}

pub fn bernoulli_generating(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let t = ps.complex("t");
    let mut pow = Complex64::new(1.0, 0.0);
    let mut lhs = Complex64::new(0.0, 0.0);
    for n in 0..=MAX_BERNOULLI {
        lhs += bernoulli_over_factorial(n) * pow;
        pow *= t;
    }
    Ok(Outcome::new(lhs, t / (t.exp() - 1.0)))
}

pub fn zeta_series(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let s = ps.complex("s");
    let z = ps.real("z");
    if s.re <= 1.0 || z <= 0.0 {
        return Err(Error::Domain(
            "quadrature route needs Re s > 1 and z > 0".into(),
        ));
    }
    // z^{1-s} Q(s, z) = z int_0^1 v^{s-1} / (e^{zv} - 1) dv
    let q = tanh_sinh_unit(
        |v| {
            if v <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            z * Complex64::new(v, 0.0).powc(s - 1.0) / (z * v).exp_m1()
        },
        QUAD_TOL,
    );
    Ok(Outcome::new(incomplete_zeta_q(s, z.into())?, q.value)
        .note(format!("quadrature error {:.3e}", q.error)))
}

fn zero_sum(id: IncompleteIdentity, ps: &Params) -> littlewood::Result<Outcome> {
    let p = ps.complex(if id.in_s() { "z" } else { "s" });
    let route = ps.text("route");
    let window = default_window(id, p);
    let sums = incomplete_zero_sums(id, p, (route == "enumeration").then_some(&window))?;
    let pair = match route {
        "algebraic" => sums.algebraic_pair(),
        "enumeration" => sums
            .enumeration_pair()
            .ok_or_else(|| Error::Precondition("enumeration unavailable".into()))?,
        other => return Err(Error::Precondition(format!("unknown route `{other}`"))),
    };
    let other = (sums.algebraic.value - sums.rhs).norm();
    Ok(Outcome::from(pair).note(format!("algebraic route off by {other:.3e}")))
}

pub fn eq32(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    zero_sum(IncompleteIdentity::Eq32, ps)
}

pub fn eq35(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    zero_sum(IncompleteIdentity::Eq35, ps)
}

pub fn eq36(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    zero_sum(IncompleteIdentity::Eq36, ps)
}

pub fn eq310(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    zero_sum(IncompleteIdentity::Eq310, ps)
}

pub fn b1_integral(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let z = ps.complex("z");
    Ok(Outcome::new(
        b_coeff_series(1, z)?,
        b_coeff_recursion(1, z)?,
    ))
}

pub fn b_recursion(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let (k, z) = (ps.int("k") as u32, ps.complex("z"));
    Ok(Outcome::new(
        b_coeff_recursion(k, z)?,
        b_coeff_series(k, z)?,
    ))
}

pub fn q_expansion(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let (s, z) = (ps.complex("s"), ps.complex("z"));
    let lhs = -s * incomplete_zeta_q(s, z)?;
    let mut rhs = z / 2.0;
    let mut pow = Complex64::new(1.0, 0.0);
    for k in 1..=ps.int("terms") as u32 {
        pow *= s;
        rhs += b_coeff(k, z)? * pow;
    }
    Ok(Outcome::new(lhs, rhs))
}

pub fn ein_series(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let z = ps.complex("z");
    let mut pow = Complex64::new(-1.0, 0.0);
    let sum = taylor_sum(
        |n| {
            if n == 0 {
                return Complex64::new(0.0, 0.0);
            }
            pow *= -z / f64::from(n);
            pow / f64::from(n)
        },
        400,
    );
    Ok(Outcome::new(sum, ein(z)).note("direct Taylor sum"))
}

pub fn a2_integral(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let z = ps.complex("z");
    let q = tanh_sinh_unit(
        |v| {
            if v <= 0.0 {
                return z;
            }
            ein(z * v) / v
        },
        QUAD_TOL,
    );
    Ok(Outcome::new(a_coeff(2, z)?, q.value).note(format!("quadrature error {:.3e}", q.error)))
}

pub fn a2_asymptotic(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let z = ps.real("z");
    let g = euler_gamma();
    let l = z.ln();
    let rhs = 0.5 * l * l + g * l + 0.5 * g * g + PI * PI / 12.0;
    Ok(Outcome::new(a_coeff(2, z.into())?, rhs.into()))
}

pub fn zeta_zeros(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let path = ps.text("zeros");
    let (ordinates, source) = if path.is_empty() {
        (parse_zeta_zeros(ZETA_TABLE)?, "bundled table".to_string())
    } else {
        (
            parse_zeta_zeros(&std::fs::read_to_string(path)?)?,
            path.to_string(),
        )
    };
    let sum = zeta_zero_sum(&ordinates, ps.flag("tail"))?;
    let g = euler_gamma();
    let rhs = 1.0 - PI * PI / 8.0 + g * g + 2.0 * stieltjes(1)?;
    Ok(Outcome::series(sum, rhs.into())
        .note(format!("{} ordinates from {source}", ordinates.len())))
}
