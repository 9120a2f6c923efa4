use nalgebra::DMatrix;
use num_complex::Complex64;

/// Roots of `c[0] + c[1] x + ... + c[d] x^d` as eigenvalues of the companion matrix.
pub fn companion_roots(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    assert!(
        d >= 1 && c[d].norm() > 0.0,
        "leading coefficient must be nonzero"
    );
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..d {
        m[(i, d - 1)] = -c[i] / c[d];
    }
    m.schur()
        .eigenvalues()
        .expect("complex Schur form is triangular")
        .iter()
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic() {
        let c = [2.0, -3.0, 1.0].map(|v| Complex64::new(v, 0.0));
        let mut r: Vec<f64> = companion_roots(&c).iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        assert!((r[0] - 1.0).abs() < 1e-12 && (r[1] - 2.0).abs() < 1e-12);
    }
}
