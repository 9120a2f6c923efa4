use littlewood::numerics::euler_gamma;
use littlewood::series::{
    catalog_zero_sum, identity_lhs, identity_rhs, Budget, CatalogFunction, SeriesIdentity,
};
use littlewood::zeros::{gamma_level_zeros, inverse_square_sum};
use littlewood::Complex64;

use super::{square, Outcome};
use crate::params::Params;

fn budget(ps: &Params) -> Budget {
    Budget {
        terms: ps.int("terms") as usize,
        order: ps.int("order") as usize,
    }
}

fn identity(id: SeriesIdentity, ps: &Params) -> littlewood::Result<Outcome> {
    let lhs = identity_lhs(id, budget(ps))?;
    Ok(Outcome::series(lhs, identity_rhs(id)?))
}

pub fn half_int_sq(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    identity(SeriesIdentity::HalfIntSq, ps)
}

pub fn hansen(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let id = SeriesIdentity::Hansen6127 {
        a: ps.complex("a"),
        b: ps.complex("b"),
        c: ps.complex("c"),
    };
    identity(id, ps)
}

pub fn alternating(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let id = SeriesIdentity::Alt6139 {
        a: ps.real("a"),
        b: ps.real("b"),
    };
    identity(id, ps)
}

/// Reports the bare sum; the printed `-2/c^3` moves to the right side.
pub fn sqrt_cube(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let c = ps.complex("c");
    let mut out = identity(SeriesIdentity::SqrtCube { c }, ps)?;
    let shift = 2.0 / (c * c * c);
    out.lhs += shift;
    out.rhs += shift;
    Ok(out.note("lhs is the bare sum, 2/c^3 carried on both sides"))
}

pub fn sqrt_cube_limit(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    identity(SeriesIdentity::SqrtCubeAt1, ps)
}

pub fn three_halves(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    identity(SeriesIdentity::ThreeHalves { a: ps.complex("a") }, ps)
}

pub fn exp_shift(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    identity(SeriesIdentity::ExpShift { b: ps.complex("b") }, ps)
}

pub fn gamma_level_closed(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let a = ps.complex("a");
    let v = catalog_zero_sum(CatalogFunction::GammaLevel { a })?;
    let g = euler_gamma();
    Ok(Outcome::new(v.value, 2.0 * a * g + a * a).note("lemma value on z (Gamma(z) - a)"))
}

pub fn gamma_level_enumerated(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    let a = ps.complex("a");
    let closed = catalog_zero_sum(CatalogFunction::GammaLevel { a })?.value;
    let scan = gamma_level_zeros(a, &square(ps.real("half_width"))?)?;
    let (sum, bound) = inverse_square_sum(&scan);
    Ok(Outcome::new(sum, closed)
        .note(format!(
            "{} zeros, {} unresolved cells, cell bound {bound:.3e}",
            scan.zeros.len(),
            scan.unresolved.len()
        ))
        .note("raw window sum, no tail model"))
}

fn catalog(f: CatalogFunction) -> littlewood::Result<Outcome> {
    let v = catalog_zero_sum(f)?;
    let mut out =
        Outcome::new(v.value, Complex64::new(0.0, 0.0)).note(format!("variant {}", v.variant));
    if (v.printed_value - v.value).norm() > 0.0 {
        out = out.note(format!("printed form gives {:.12}", v.printed_value));
    }
    Ok(out)
}

pub fn catalog_exp_quad(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    catalog(CatalogFunction::ExpMinusAZZ2 { a: ps.complex("a") })
}

pub fn catalog_exp_2z(_: &Params, _: f64) -> littlewood::Result<Outcome> {
    catalog(CatalogFunction::ExpMinus2Z)
}

pub fn catalog_sin(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    catalog(CatalogFunction::SinMinusAZ { a: ps.complex("a") })
}

pub fn catalog_cos(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    catalog(CatalogFunction::CosMinusAQuad { a: ps.complex("a") })
}

pub fn catalog_bessel(ps: &Params, _: f64) -> littlewood::Result<Outcome> {
    catalog(CatalogFunction::BesselNormalized {
        alpha: ps.real("alpha"),
        a: ps.complex("a"),
    })
}
