use std::f64::consts::PI;

use num_complex::Complex64;

use super::handle::{FunctionHandle, ZeroPoleRecord};
use crate::contour::{principal_log, track_log, Path, RectRegion};
use crate::{Error, Result};

const NUDGE_STEP: f64 = 1e-4;
const NUDGE_MAX: f64 = 1e-3;
const GUARD: f64 = 1e-6;
const MAX_DEPTH: usize = 40;
const SPLITS: [f64; 4] = [0.5 + 0.0173, 0.5 - 0.0311, 0.5 + 0.0419, 0.5 - 0.0097];

/// Zeros found by subdivision, plus cells whose Newton refinement stalled.
#[derive(Debug, Clone, Default)]
pub struct ZeroScan {
    pub zeros: Vec<ZeroPoleRecord>,
    pub unresolved: Vec<(RectRegion, u32)>,
}

/// Winding number of `f` along the counterclockwise boundary of `rect`.
pub fn boundary_winding(handle: &FunctionHandle, rect: &RectRegion) -> Result<i64> {
    winding_guarded(handle, rect, GUARD)
}

fn winding_guarded(handle: &FunctionHandle, rect: &RectRegion, guard: f64) -> Result<i64> {
    let c = rect.corners();
    let mut value = principal_log(handle, c[0])?;
    let mut change = 0.0;
    let mut closest = f64::INFINITY;
    for i in 0..4 {
        let bp = track_log(
            handle,
            Path::Segment {
                a: c[i],
                b: c[(i + 1) % 4],
            },
            value,
        )?;
        change += bp.arg_change();
        value = bp.end_value();
        let (k, f) = bp
            .f_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("nonempty samples");
        // Newton distance from the lowest sample to the nearest zero.
        closest = closest.min(f.norm() / handle.derivative(bp.points[k]).norm());
    }
    if closest < guard {
        return Err(Error::BoundaryHit);
    }
    Ok((change / (2.0 * PI)).round() as i64)
}

fn poles_inside(handle: &FunctionHandle, rect: &RectRegion) -> i64 {
    handle
        .poles_where(|z| rect.contains(z))
        .iter()
        .map(|p| p.multiplicity as i64)
        .sum()
}

fn pole_near_boundary(handle: &FunctionHandle, rect: &RectRegion) -> bool {
    handle
        .known_poles
        .iter()
        .any(|p| rect.boundary_distance(p.location) < GUARD)
}

/// Zeros inside `rect` (winding plus known poles), with the rectangle
/// actually used after nudging.
pub fn count_zeros_nudged(handle: &FunctionHandle, rect: &RectRegion) -> Result<(i64, RectRegion)> {
    let mut d = 0.0;
    loop {
        let r = rect.expanded(d);
        if !pole_near_boundary(handle, &r) {
            match boundary_winding(handle, &r) {
                Ok(w) => return Ok((w + poles_inside(handle, &r), r)),
                Err(Error::ZeroOnPath(_)) | Err(Error::BoundaryHit) => {}
                Err(e) => return Err(e),
            }
        }
        d += NUDGE_STEP;
        if d > NUDGE_MAX + 1e-12 {
            return Err(Error::BoundaryHit);
        }
    }
}

/// Number of zeros of `f` inside `rect`, counted with multiplicity.
pub fn count_zeros_in_rect(handle: &FunctionHandle, rect: &RectRegion) -> Result<i64> {
    count_zeros_nudged(handle, rect).map(|(n, _)| n)
}

fn cell_count(handle: &FunctionHandle, rect: &RectRegion) -> Result<i64> {
    if pole_near_boundary(handle, rect) {
        return Err(Error::BoundaryHit);
    }
    let guard = GUARD.min(1e-3 * rect.diameter());
    Ok(winding_guarded(handle, rect, guard)? + poles_inside(handle, rect))
}

/// Mean modulus on a circle around the cell, no smaller than `1e-3 (1 + |c|)`.
fn local_scale(handle: &FunctionHandle, cell: &RectRegion) -> f64 {
    let c = cell.center();
    let r = cell.diameter().max(1e-3 * (1.0 + c.norm()));
    let s: f64 = (0..8)
        .map(|k| {
            handle
                .eval(c + Complex64::from_polar(r, PI * k as f64 / 4.0))
                .norm()
        })
        .filter(|v| v.is_finite())
        .sum();
    s / 8.0
}

fn newton(handle: &FunctionHandle, cell: &RectRegion, mult: f64) -> Complex64 {
    let mut z = cell.center();
    let leash = cell.expanded(cell.diameter());
    for _ in 0..80 {
        let step = if handle.has_log_deriv() {
            mult / handle.log_deriv(z)
        } else {
            mult * handle.eval(z) / handle.derivative(z)
        };
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if !leash.contains(z) {
            break;
        }
        if step.norm() <= 4.0 * f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// All zeros inside `rect` by recursive subdivision and Newton refinement.
///
/// A cell holding a single zero is refined by Newton from its center; the
/// result must land in the cell with `|f| < tol * max(1, scale)`, where
/// `scale` is the mean modulus on a small circle around the cell. Cells that stay
/// unresolved at the depth limit are reported with their counts.
pub fn complex_zeros_in_rect(
    handle: &FunctionHandle,
    rect: &RectRegion,
    tol: f64,
) -> Result<ZeroScan> {
    let (n, r) = count_zeros_nudged(handle, rect)?;
    let mut scan = ZeroScan::default();
    if n > 0 {
        refine_cell(handle, &r, n, tol, 0, &mut scan)?;
    }
    Ok(scan)
}

fn accept(handle: &FunctionHandle, cell: &RectRegion, z: Complex64, tol: f64) -> bool {
    let slack = 1e-9 * (1.0 + cell.diameter());
    let grown = cell.expanded(slack);
    grown.contains(z) && handle.eval(z).norm() < tol * local_scale(handle, cell).max(1.0)
}

fn refine_cell(
    handle: &FunctionHandle,
    cell: &RectRegion,
    n: i64,
    tol: f64,
    depth: usize,
    scan: &mut ZeroScan,
) -> Result<()> {
    let z = newton(handle, cell, n as f64);
    if accept(handle, cell, z, tol) && (n == 1 || cell.diameter() < 1e-4 * (1.0 + z.norm())) {
        scan.zeros.push(ZeroPoleRecord::zero(z, n as u32));
        return Ok(());
    }
    let scale = cell.diameter() / (1.0 + cell.center().norm());
    if depth >= MAX_DEPTH || scale < 1e-9 {
        let z = newton(handle, cell, n as f64);
        if accept(handle, cell, z, tol) {
            scan.zeros.push(ZeroPoleRecord::zero(z, n as u32));
        } else {
            scan.unresolved.push((*cell, n as u32));
        }
        return Ok(());
    }
    'split: for &f in &SPLITS {
        let quarters = cell.quarters(f, f);
        let mut counts = [0i64; 4];
        for (q, c) in quarters.iter().zip(counts.iter_mut()) {
            match cell_count(handle, q) {
                Ok(k) => *c = k,
                Err(Error::ZeroOnPath(_)) | Err(Error::BoundaryHit) => continue 'split,
                Err(e) => return Err(e),
            }
        }
        if counts.iter().sum::<i64>() != n {
            continue;
        }
        for (q, &k) in quarters.iter().zip(counts.iter()) {
            if k > 0 {
                refine_cell(handle, q, k, tol, depth + 1, scan)?;
            }
        }
        return Ok(());
    }
    scan.unresolved.push((*cell, n as u32));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cos_pi() -> FunctionHandle {
        FunctionHandle::new("cos", |z: Complex64| (PI * z).cos())
    }

    #[test]
    fn counts() {
        let r = RectRegion::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        assert_eq!(count_zeros_in_rect(&cos_pi(), &r).unwrap(), 2);
        let s = FunctionHandle::new("sin", |z: Complex64| z.sin());
        let r = RectRegion::new(-4.0, 4.0, -1.0, 1.0).unwrap();
        assert_eq!(count_zeros_in_rect(&s, &r).unwrap(), 3);
    }

    #[test]
    fn zero_on_edge_is_nudged() {
        let r = RectRegion::new(-0.5, 0.7, -1.0, 1.0).unwrap();
        assert_eq!(count_zeros_in_rect(&cos_pi(), &r).unwrap(), 2);
    }

    #[test]
    fn double_zero() {
        let h = FunctionHandle::new("sq", |z: Complex64| {
            (z - Complex64::new(0.3, 0.2)).powi(2) * (z + 1.0)
        });
        let r = RectRegion::new(-2.0, 2.0, -1.0, 1.0).unwrap();
        let scan = complex_zeros_in_rect(&h, &r, 1e-10).unwrap();
        let total: u32 = scan.zeros.iter().map(|z| z.multiplicity).sum();
        assert_eq!(total, 3, "{scan:?}");
        assert!(scan.unresolved.is_empty());
    }

    #[test]
    fn exp_minus_2z() {
        let h = FunctionHandle::new("e^z-2z", |z: Complex64| z.exp() - 2.0 * z)
            .with_log_deriv(|z: Complex64| (z.exp() - 2.0) / (z.exp() - 2.0 * z));
        let r = RectRegion::new(-2.0, 2.0, 0.0, 3.0).unwrap();
        let scan = complex_zeros_in_rect(&h, &r, 1e-10).unwrap();
        assert_eq!(scan.zeros.len(), 1);
        let z = scan.zeros[0].location;
        assert!((z.exp() - 2.0 * z).norm() < 1e-10);
        let lo = RectRegion::new(-2.0, 2.0, -3.0, 0.0).unwrap();
        let conj = complex_zeros_in_rect(&h, &lo, 1e-10).unwrap();
        assert!((conj.zeros[0].location - z.conj()).norm() < 1e-12);
    }
}
