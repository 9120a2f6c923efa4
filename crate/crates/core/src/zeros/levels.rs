use num_complex::Complex64;

use super::rect::{complex_zeros_in_rect, ZeroScan};
use super::targets::gamma_level;
use crate::contour::RectRegion;
use crate::Result;

const LEVEL_TOL: f64 = 1e-10;

/// Solutions of `Gamma(z) = a` inside `rect`, located as zeros of
/// `z (Gamma(z) - a)` whose poles sit at the negative integers.
///
/// Zeros hugging a pole far out on the negative axis can be too close to it
/// for double precision to separate; such cells are returned in
/// [`ZeroScan::unresolved`] with their counts.
pub fn gamma_level_zeros(a: Complex64, rect: &RectRegion) -> Result<ZeroScan> {
    let mut scan = complex_zeros_in_rect(&gamma_level(a), rect, LEVEL_TOL)?;
    // z = 0 is a zero of z (Gamma(z) - a) only through the prefactor.
    scan.zeros.retain(|r| r.location.norm() > 1e-12);
    Ok(scan)
}

/// `sum k / rho^2` over a scan, counting each unresolved cell at its center.
/// The second value bounds the error committed on the unresolved cells.
pub fn inverse_square_sum(scan: &ZeroScan) -> (Complex64, f64) {
    let mut total = Complex64::new(0.0, 0.0);
    for r in &scan.zeros {
        total += r.multiplicity as f64 / (r.location * r.location);
    }
    let mut bound = 0.0;
    for (cell, count) in &scan.unresolved {
        let c = cell.center();
        total += *count as f64 / (c * c);
        let near = (c.norm() - 0.5 * cell.diameter()).max(f64::MIN_POSITIVE);
        bound += *count as f64 * cell.diameter() / near.powi(3);
    }
    (total, bound)
}
