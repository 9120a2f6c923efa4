use std::collections::BTreeMap;
use std::time::Instant;

use num_complex::Complex64;

use super::branch::{principal_log, track_log};
use super::integral::{contour_lhs, residue_fg, rhs_total};
use super::region::{Path, PoleSpecG, RectRegion};
use crate::report::IdentityReport;
use crate::zeros::{complex_zeros_in_rect, FunctionHandle, ZeroPoleRecord};
use crate::Result;

const ZERO_TOL: f64 = 1e-12;

/// Value of `ln f` at `z`, continued horizontally from the right edge of
/// `rect`, whose midpoint carries the principal branch.
pub fn horizontal_log(
    handle: &FunctionHandle,
    rect: &RectRegion,
    z: Complex64,
) -> Result<Complex64> {
    let mid = Complex64::new(rect.x2, 0.5 * (rect.y1 + rect.y2));
    let edge = Complex64::new(rect.x2, z.im);
    let at_edge = track_log(
        handle,
        Path::Segment { a: mid, b: edge },
        principal_log(handle, mid)?,
    )?;
    Ok(track_log(handle, Path::Segment { a: edge, b: z }, at_edge.end_value())?.end_value())
}

/// Zeros (from the zero finder) and known poles of `f` inside `rect`, with
/// notes on unresolved cells.
pub fn records_in_rect(
    handle: &FunctionHandle,
    rect: &RectRegion,
) -> Result<(Vec<ZeroPoleRecord>, Vec<String>)> {
    let scan = complex_zeros_in_rect(handle, rect, ZERO_TOL)?;
    let mut notes = Vec::new();
    let mut records: Vec<ZeroPoleRecord> = scan
        .zeros
        .iter()
        .copied()
        .filter(|r| rect.contains(r.location))
        .collect();
    for (cell, count) in &scan.unresolved {
        notes.push(format!(
            "unresolved cell at {} holding {count}",
            cell.center()
        ));
        records.push(ZeroPoleRecord::zero(cell.center(), *count));
    }
    records.extend(handle.poles_where(|z| rect.contains(z)));
    Ok((records, notes))
}

fn theorem_sides(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    rect: &RectRegion,
) -> Result<(Complex64, Complex64, Vec<String>)> {
    let lhs = contour_lhs(handle, g, rect)?;
    let (records, mut notes) = records_in_rect(handle, rect)?;
    let residue = if rect.contains(g.center) {
        let seed = if g.order == 1 {
            Some(horizontal_log(handle, rect, g.center + 1e-2)?)
        } else {
            None
        };
        residue_fg(handle, g, seed)?
    } else {
        Complex64::new(0.0, 0.0)
    };
    let rhs = rhs_total(&records, g, rect, residue)?;
    notes.insert(0, format!("{} zero/pole records", records.len()));
    notes.push(format!("lhs quadrature error {:.2e}", lhs.error));
    Ok((lhs.value, rhs, notes))
}

/// Both sides of the contour identity for `f`, `g` and `rect`; failures of
/// any stage are recorded in the report.
pub fn verify_theorem(
    handle: &FunctionHandle,
    g: &PoleSpecG,
    rect: &RectRegion,
    tol: f64,
) -> IdentityReport {
    let start = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("f".to_string(), handle.name.clone());
    params.insert("g_center".to_string(), g.center.to_string());
    params.insert("g_order".to_string(), g.order.to_string());
    params.insert(
        "rect".to_string(),
        format!("[{}, {}]x[{}, {}]", rect.x1, rect.x2, rect.y1, rect.y2),
    );
    let report = match theorem_sides(handle, g, rect) {
        Ok((lhs, rhs, notes)) => {
            IdentityReport::new("theorem1.1", params, lhs, rhs, tol, notes.join("; "))
        }
        Err(e) => IdentityReport::failure("theorem1.1", params, tol, e.to_string()),
    };
    report.with_wall_time(start.elapsed().as_secs_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::targets;

    #[test]
    fn cos_window_passes() {
        let rect = RectRegion::new(-1.9, 1.9, -1.3, 1.3).unwrap();
        let g = PoleSpecG::new(Complex64::new(0.0, 0.0), 3).unwrap();
        let r = verify_theorem(&targets::cos_pi(), &g, &rect, 1e-8);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn simple_pole_uses_horizontal_branch() {
        let rect = RectRegion::new(-2.3, 1.7, -1.1, 0.9).unwrap();
        let g = PoleSpecG::new(Complex64::new(-1.2, 0.3), 1).unwrap();
        let r = verify_theorem(&targets::cos_pi(), &g, &rect, 1e-8);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn meromorphic_digamma_window() {
        let rect = RectRegion::new(-3.5, 2.0, -1.0, 1.0).unwrap();
        let g = PoleSpecG::new(Complex64::new(0.3, 0.4), 3).unwrap();
        let r = verify_theorem(&targets::neg_z_digamma(), &g, &rect, 1e-8);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn failures_are_reported() {
        let rect = RectRegion::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let g = PoleSpecG::new(Complex64::new(1.0, 0.0), 2).unwrap();
        let r = verify_theorem(&targets::cos_pi(), &g, &rect, 1e-8);
        assert!(!r.pass);
        assert!(r.notes.contains("contour"), "{}", r.notes);
    }
}
