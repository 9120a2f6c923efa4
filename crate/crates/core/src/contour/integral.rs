//! Left and right sides of the generalized Littlewood identity on a rectangle.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::branch::{principal_log, track_log, BranchPath};
use super::region::{Path, PoleSpecG, RectRegion};
use crate::quad::integrate;
use crate::zeros::{FunctionHandle, RecordKind, ZeroPoleRecord};
use crate::{Error, Result};

const TWO_PI_I: Complex64 = Complex64::new(0.0, 2.0 * PI);
const QUAD_TOL: f64 = 1e-13;
const MAX_PANELS: usize = 4000;
const PROBES: usize = 96;

/// A quadrature value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourValue {
    pub value: Complex64,
    pub error: f64,
}

/// Per-edge determination of `ln f` under the horizontal-continuation rule.
#[derive(Debug, Clone)]
pub struct EdgeBranches {
    pub right_up: BranchPath,
    pub right_down: BranchPath,
    pub top: BranchPath,
    pub left: BranchPath,
    pub bottom: BranchPath,
    /// Ordinates where the left-edge correction `k` changes, descending,
    /// with the value of `k` just below each ordinate.
    pub jumps: Vec<(f64, i64)>,
}

impl EdgeBranches {
    /// Continuous boundary argument change, in units of `2 pi`.
    pub fn winding(&self) -> f64 {
        let total = self.right_up.arg_change() + self.top.arg_change() + self.left.arg_change()
            - self.bottom.arg_change()
            - self.right_down.arg_change();
        total / (2.0 * PI)
    }

    /// Continuous value of `ln f` on the right edge at ordinate `y`.
    fn right_value(&self, handle: &FunctionHandle, rect: &RectRegion, y: f64) -> Complex64 {
        let ym = 0.5 * (rect.y1 + rect.y2);
        if y >= ym {
            self.right_up.value_at(handle, (y - ym) / (rect.y2 - ym))
        } else {
            self.right_down.value_at(handle, (ym - y) / (ym - rect.y1))
        }
    }
}

fn segment(a: Complex64, b: Complex64) -> Path {
    Path::Segment { a, b }
}

/// Tracks the boundary under the horizontal-continuation determination,
/// seeded by the principal logarithm at the right-edge midpoint.
pub fn edge_branches(handle: &FunctionHandle, rect: &RectRegion) -> Result<EdgeBranches> {
    let [br, tr, tl, bl] = rect.corners();
    let mid = Complex64::new(rect.x2, 0.5 * (rect.y1 + rect.y2));
    let seed = principal_log(handle, mid)?;
    let right_up = track_log(handle, segment(mid, tr), seed)?;
    let right_down = track_log(handle, segment(mid, br), seed)?;
    let top = track_log(handle, segment(tr, tl), right_up.end_value())?;
    let left = track_log(handle, segment(tl, bl), top.end_value())?;
    let bottom = track_log(handle, segment(br, bl), right_down.end_value())?;
    let mut edges = EdgeBranches {
        right_up,
        right_down,
        top,
        left,
        bottom,
        jumps: Vec::new(),
    };
    edges.jumps = locate_jumps(handle, rect, &edges)?;
    Ok(edges)
}

/// `k(y)` with `ln f(X1 + iy)` by horizontal continuation equal to the
/// continuous left-edge value plus `2 pi i k(y)`.
fn probe(handle: &FunctionHandle, rect: &RectRegion, edges: &EdgeBranches, y: f64) -> Result<i64> {
    let mut yy = y;
    for attempt in 0..4 {
        let a = Complex64::new(rect.x2, yy);
        let b = Complex64::new(rect.x1, yy);
        let seed = edges.right_value(handle, rect, yy);
        match track_log(handle, segment(a, b), seed) {
            Ok(h) => {
                let t = (rect.y2 - yy) / rect.height();
                let cont = edges.left.value_at(handle, t);
                let k = (h.end_value().im - cont.im) / (2.0 * PI);
                return Ok(k.round() as i64);
            }
            Err(Error::ZeroOnPath(_)) if attempt < 3 => {
                yy += 1e-9 * rect.height() * (attempt + 1) as f64;
            }
            Err(e) => return Err(e),
        }
    }
    unreachable!()
}

fn locate_jumps(
    handle: &FunctionHandle,
    rect: &RectRegion,
    edges: &EdgeBranches,
) -> Result<Vec<(f64, i64)>> {
    let ys: Vec<f64> = (0..=PROBES)
        .map(|i| rect.y2 - rect.height() * i as f64 / PROBES as f64)
        .collect();
    let mut ks = Vec::with_capacity(ys.len());
    for (i, &y) in ys.iter().enumerate() {
        // The corners themselves carry k = 0 at the top by construction.
        ks.push(if i == 0 {
            0
        } else {
            probe(handle, rect, edges, y)?
        });
    }
    let mut jumps = Vec::new();
    for i in 0..PROBES {
        if ks[i] == ks[i + 1] {
            continue;
        }
        let (mut hi, mut lo) = (ys[i], ys[i + 1]);
        let (k_hi, k_lo) = (ks[i], ks[i + 1]);
        let tol = 1e-13 * (1.0 + rect.height());
        while hi - lo > tol {
            let m = 0.5 * (hi + lo);
            let km = probe(handle, rect, edges, m)?;
            if km == k_hi {
                hi = m;
            } else if km == k_lo {
                lo = m;
            } else {
                // Two jumps inside one probe cell; keep the upper one here and
                // let the remaining cell be scanned again.
                lo = m;
            }
        }
        let y = 0.5 * (hi + lo);
        jumps.push((y, k_lo));
    }
    Ok(jumps)
}

fn integrate_edge(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    bp: &BranchPath,
    t0: f64,
    t1: f64,
    shift: Complex64,
    tol: f64,
) -> Result<ContourValue> {
    let path = bp.path;
    let q = integrate(
        |t| {
            let z = path.point(t);
            (bp.value_at(handle, t) + shift) * g.eval(z) * path.tangent(t)
        },
        t0,
        t1,
        tol,
        tol,
        MAX_PANELS,
    )?;
    Ok(ContourValue {
        value: q.value,
        error: q.error,
    })
}

/// Counterclockwise `int_C F g dz` with `F` fixed by horizontal continuation
/// from the right edge.
pub fn contour_lhs(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    rect: &RectRegion,
) -> Result<ContourValue> {
    if rect.boundary_distance(g.center) < 1e-9 {
        return Err(Error::Precondition("pole of g lies on the contour".into()));
    }
    let edges = edge_branches(handle, rect)?;
    contour_lhs_with(handle, g, rect, &edges)
}

/// [`contour_lhs`] reusing precomputed edge branches.
pub fn contour_lhs_with(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    rect: &RectRegion,
    edges: &EdgeBranches,
) -> Result<ContourValue> {
    contour_lhs_tol(handle, g, rect, edges, QUAD_TOL)
}

/// [`contour_lhs_with`] at a given quadrature tolerance.
pub fn contour_lhs_tol(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    rect: &RectRegion,
    edges: &EdgeBranches,
    tol: f64,
) -> Result<ContourValue> {
    let zero = Complex64::new(0.0, 0.0);
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    let mut add = |v: ContourValue, sign: f64| {
        value += sign * v.value;
        error += v.error;
    };
    add(
        integrate_edge(handle, g, &edges.right_up, 0.0, 1.0, zero, tol)?,
        1.0,
    );
    add(
        integrate_edge(handle, g, &edges.right_down, 0.0, 1.0, zero, tol)?,
        -1.0,
    );
    add(
        integrate_edge(handle, g, &edges.top, 0.0, 1.0, zero, tol)?,
        1.0,
    );
    add(
        integrate_edge(handle, g, &edges.bottom, 0.0, 1.0, zero, tol)?,
        -1.0,
    );
    // Left edge runs from the top-left corner (t = 0) down to the bottom-left.
    let mut t_prev = 0.0;
    let mut k = 0i64;
    for &(y, k_below) in &edges.jumps {
        let t = (rect.y2 - y) / rect.height();
        add(
            integrate_edge(handle, g, &edges.left, t_prev, t, TWO_PI_I * k as f64, tol)?,
            1.0,
        );
        t_prev = t;
        k = k_below;
    }
    add(
        integrate_edge(
            handle,
            g,
            &edges.left,
            t_prev,
            1.0,
            TWO_PI_I * k as f64,
            tol,
        )?,
        1.0,
    );
    Ok(ContourValue { value, error })
}

/// Residue of `F g` at the pole of `g`: `F^{(m-1)}(c)/(m-1)!` from a
/// branch-tracked Cauchy integral on a circle of radius `1e-2`.
///
/// `seed` is the value of `F` at `c + r`, the start of the circle; the
/// principal logarithm is used when absent. Only order 1 depends on it.
pub fn residue_fg(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    seed: Option<Complex64>,
) -> Result<Complex64> {
    let mut radius = 1e-2;
    for attempt in 0..2 {
        match residue_on_circle(handle, g, radius, seed) {
            Ok(v) => return Ok(v),
            Err(Error::ZeroOnPath(_)) | Err(Error::BoundaryHit) if attempt == 0 => radius *= 0.1,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ZeroOnPath(g.center))
}

fn residue_on_circle(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    radius: f64,
    seed: Option<Complex64>,
) -> Result<Complex64> {
    let c = g.center;
    let path = Path::Circle {
        center: c,
        radius,
        phase: 0.0,
    };
    let start = c + radius;
    let seed = match seed {
        Some(s) if radius == 1e-2 => s,
        Some(s) => {
            // Carry the supplied determination inward along the real direction.
            track_log(handle, segment(c + 1e-2, start), s)?.end_value()
        }
        None => principal_log(handle, start)?,
    };
    let bp = track_log(handle, path, seed)?;
    if (bp.arg_change() / (2.0 * PI)).round() != 0.0 {
        // A zero or pole of f sits inside the circle.
        return Err(Error::BoundaryHit);
    }
    let m = g.order as i32;
    let mut prev: Option<Complex64> = None;
    let mut n = 64usize;
    loop {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let t = k as f64 / n as f64;
            let w = Complex64::from_polar(radius, 2.0 * PI * t);
            acc += bp.value_at(handle, t) * w.powi(1 - m);
        }
        let cur = acc / n as f64;
        if let Some(p) = prev {
            if (cur - p).norm() <= 1e-13 * cur.norm().max(1.0) || n >= 1 << 14 {
                return Ok(cur);
            }
        }
        prev = Some(cur);
        n *= 2;
    }
}

/// `2 pi i (res - sum_zeros m int_{X1+iY}^{rho} g + sum_poles l int_{X1+iY}^{rho} g)`.
pub fn rhs_total(
    records: &[ZeroPoleRecord],
    g: &PoleSpecG,
    rect: &RectRegion,
    residue: Complex64,
) -> Result<Complex64> {
    let mut acc = residue;
    for r in records {
        if !rect.contains(r.location) {
            return Err(Error::RecordOutsideRect(r.location));
        }
        if (r.location - g.center).norm() < 1e-3 {
            return Err(Error::Precondition(format!(
                "record at {} coincides with the pole of g",
                r.location
            )));
        }
        let start = Complex64::new(rect.x1, r.location.im);
        let seg = g.integral(start, r.location) * r.multiplicity as f64;
        match r.kind {
            RecordKind::Zero => acc -= seg,
            RecordKind::Pole => acc += seg,
        }
    }
    Ok(TWO_PI_I * acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn analytic_log_reduces_to_residue() {
        let h = FunctionHandle::new("exp", |z: Complex64| z.exp());
        let rect = RectRegion::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let g = PoleSpecG::new(c(0.2, 0.1), 2).unwrap();
        let v = contour_lhs(&h, &g, &rect).unwrap();
        assert!((v.value - TWO_PI_I).norm() < 1e-10, "{}", v.value);
    }

    #[test]
    fn cos_residue() {
        let h = FunctionHandle::new("cos", |z: Complex64| (PI * z).cos());
        let g = PoleSpecG::new(c(0.0, 0.0), 3).unwrap();
        let r = residue_fg(&h, &g, None).unwrap();
        assert!((r - c(-PI * PI / 2.0, 0.0)).norm() < 1e-10, "{r}");
    }

    #[test]
    fn cos_window_balances() {
        let h = FunctionHandle::new("cos", |z: Complex64| (PI * z).cos());
        let rect = RectRegion::new(-1.9, 1.9, -1.3, 1.3).unwrap();
        let g = PoleSpecG::new(c(0.0, 0.0), 3).unwrap();
        let lhs = contour_lhs(&h, &g, &rect).unwrap();
        let zeros: Vec<ZeroPoleRecord> = [-1.5, -0.5, 0.5, 1.5]
            .iter()
            .map(|&x| ZeroPoleRecord::zero(c(x, 0.0), 1))
            .collect();
        let res = residue_fg(&h, &g, None).unwrap();
        let rhs = rhs_total(&zeros, &g, &rect, res).unwrap();
        assert!((lhs.value - rhs).norm() < 1e-8, "{} vs {}", lhs.value, rhs);
    }
}
