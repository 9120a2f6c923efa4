use littlewood::contour::{verify_theorem, PoleSpecG};
use littlewood::zeros::{targets, FunctionHandle};
use littlewood::Complex64;

use super::{rect, Outcome};
use crate::params::Params;

fn window(handle: &FunctionHandle, ps: &Params, tol: f64) -> littlewood::Result<Outcome> {
    let g = PoleSpecG::new(ps.complex("g_center"), ps.int("g_order") as u32)?;
    let r = verify_theorem(handle, &g, &rect(ps)?, tol);
    let mut out = Outcome::new(r.lhs, r.rhs);
    if !r.notes.is_empty() {
        out = out.note(r.notes);
    }
    Ok(out)
}

pub fn cos(ps: &Params, tol: f64) -> littlewood::Result<Outcome> {
    window(&targets::cos_pi(), ps, tol)
}

pub fn exp_level(ps: &Params, tol: f64) -> littlewood::Result<Outcome> {
    let a = ps.complex("a");
    let h = FunctionHandle::new(format!("e^z - ({a})"), move |z: Complex64| z.exp() - a)
        .with_log_deriv(move |z: Complex64| z.exp() / (z.exp() - a));
    window(&h, ps, tol)
}

pub fn digamma(ps: &Params, tol: f64) -> littlewood::Result<Outcome> {
    window(&targets::neg_z_digamma(), ps, tol)
}
