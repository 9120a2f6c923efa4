use littlewood::numerics::{digamma, euler_gamma, polygamma, zeta_int};
use littlewood::zeros::{
    digamma_identity, polygamma_identity, DigammaIdentity, PolygammaBudget, PolygammaIdentity,
};
use littlewood::Complex64;

use super::{square, Outcome};
use crate::params::Params;

fn count(ps: &Params) -> usize {
    ps.int("count") as usize
}

pub fn laurent_digamma(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let x = ps.complex("x");
    let mut rhs = -1.0 / x - euler_gamma();
    let mut pow = Complex64::new(1.0, 0.0);
    for n in 1..=ps.int("terms") as u32 {
        pow *= x;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        rhs += sign * zeta_int(n + 1)? * pow;
    }
    Ok(Outcome::new(digamma(x)?, rhs))
}

pub fn laurent_polygamma(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let n = ps.int("n") as u32;
    let z = ps.complex("z");
    let fact = |m: u32| -> f64 { (1..=m).map(f64::from).product() };
    let lead = if n % 2 == 1 { 1.0 } else { -1.0 } * fact(n);
    let mut rhs = lead / z.powi(n as i32 + 1);
    let mut pow = Complex64::new(1.0, 0.0);
    for k in 0..=ps.int("terms") as u32 {
        let sign = if (n + k) % 2 == 1 { 1.0 } else { -1.0 };
        let ratio: f64 = (k + 1..=n + k).map(f64::from).product();
        rhs += sign * ratio * zeta_int(n + k + 1)? * pow;
        pow *= z;
    }
    Ok(Outcome::new(polygamma(n, z)?, rhs))
}

pub fn reciprocal(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    Ok(digamma_identity(DigammaIdentity::Eq42, count(ps))?.into())
}

pub fn log_limit(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    Ok(digamma_identity(DigammaIdentity::Eq43Limit, count(ps))?.into())
}

pub fn shift(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    Ok(digamma_identity(DigammaIdentity::Eq44 { p: ps.real("p") }, count(ps))?.into())
}

pub fn at_pole(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    Ok(digamma_identity(DigammaIdentity::Eq45 { k: ps.int("k") }, count(ps))?.into())
}

pub fn at_zero(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    Ok(digamma_identity(DigammaIdentity::Eq46 { k: ps.int("k") }, count(ps))?.into())
}

pub fn sum_rho_sq(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    Ok(digamma_identity(DigammaIdentity::SumRhoSq, count(ps))?.into())
}

fn theorem(id: PolygammaIdentity, ps: &Params) -> littlewood::Result<Outcome> {
    let budget = PolygammaBudget {
        real_count: ps.int("real_count") as usize,
        rect: square(ps.real("half_width"))?,
    };
    Ok(polygamma_identity(id, ps.int("n") as u32, &budget)?.into())
}

pub fn first_power(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    theorem(PolygammaIdentity::A, ps)
}

pub fn middle_power(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    theorem(
        PolygammaIdentity::B {
            j: ps.int("j") as u32,
        },
        ps,
    )
}

pub fn top_power(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    theorem(PolygammaIdentity::C, ps)
}
