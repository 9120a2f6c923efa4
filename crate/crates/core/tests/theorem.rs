use littlewood::contour::{
    contour_lhs, contour_lhs_tol, edge_branches, verify_theorem, PoleSpecG, RectRegion,
};
use littlewood::zeros::{count_zeros_in_rect, targets, FunctionHandle};
use littlewood::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cube_at_origin() -> PoleSpecG {
    PoleSpecG::new(c(0.0, 0.0), 3).unwrap()
}

#[test]
fn cos_contour_shrinks_like_inverse_width() {
    let h = targets::cos_pi();
    let scaled: Vec<f64> = [5.25, 10.25, 20.25]
        .iter()
        .map(|&x| {
            let rect = RectRegion::new(-x, x, -x, x).unwrap();
            contour_lhs(&h, &cube_at_origin(), &rect)
                .unwrap()
                .value
                .norm()
                * x
        })
        .collect();
    let lhs: Vec<f64> = scaled
        .iter()
        .zip([5.25, 10.25, 20.25])
        .map(|(s, x)| s / x)
        .collect();
    assert!(lhs.windows(2).all(|w| w[1] < w[0]), "{lhs:?}");
    // X |LHS| stays bounded.
    let (lo, hi) = scaled
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(l, h), &v| (l.min(v), h.max(v)));
    assert!(hi / lo < 2.0, "{scaled:?}");
}

#[test]
fn deformation_keeps_the_identity() {
    let h = targets::cos_pi();
    for rect in [
        RectRegion::new(-1.9, 1.9, -1.3, 1.3).unwrap(),
        RectRegion::new(-1.7, 1.95, -0.8, 2.1).unwrap(),
    ] {
        let r = verify_theorem(&h, &cube_at_origin(), &rect, 1e-8);
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn winding_equals_zero_count() {
    let cases: Vec<(FunctionHandle, RectRegion)> = vec![
        (
            targets::cos_pi(),
            RectRegion::new(-2.2, 3.3, -1.0, 0.7).unwrap(),
        ),
        (
            targets::sine(),
            RectRegion::new(-4.0, 7.0, -0.5, 0.5).unwrap(),
        ),
        (
            targets::exp_minus_linear(c(2.0, 0.0)),
            RectRegion::new(-2.0, 2.0, -3.0, 3.0).unwrap(),
        ),
    ];
    for (h, rect) in cases {
        let n = count_zeros_in_rect(&h, &rect).unwrap();
        let w = edge_branches(&h, &rect).unwrap().winding();
        assert!((w - n as f64).abs() < 1e-9, "{}: {w} vs {n}", h.name);
    }
}

#[test]
fn quadrature_error_estimate_is_honest() {
    let h = targets::cos_pi();
    let rect = RectRegion::new(-2.4, 2.6, -1.1, 1.4).unwrap();
    let g = PoleSpecG::new(c(0.2, 0.1), 2).unwrap();
    let edges = edge_branches(&h, &rect).unwrap();
    let fine = contour_lhs_tol(&h, &g, &rect, &edges, 1e-13).unwrap();
    let coarse = contour_lhs_tol(&h, &g, &rect, &edges, 1e-8).unwrap();
    let shift = (fine.value - coarse.value).norm();
    assert!(
        shift < 10.0 * coarse.error.max(1e-15),
        "{shift:e} vs {:e}",
        coarse.error
    );
}

#[test]
fn sine_window_with_shifted_pole() {
    // A finite window of the sin(az + b) family with g = 1/(z + c)^3.
    let (a, b) = (1.3, 0.4);
    let h = FunctionHandle::new("sin(1.3 z + 0.4)", move |z: Complex64| (a * z + b).sin());
    let g = PoleSpecG::new(c(-0.7, 0.35), 3).unwrap();
    let rect = RectRegion::new(-6.1, 5.3, -1.7, 1.9).unwrap();
    let r = verify_theorem(&h, &g, &rect, 1e-8);
    assert!(r.pass, "{r:?}");
}

#[test]
fn digamma_window_with_poles() {
    let g = cube_at_origin();
    let rect = RectRegion::new(-4.6, 2.3, -1.2, 1.1).unwrap();
    let g_off = PoleSpecG::new(c(0.6, 0.25), 3).unwrap();
    for gg in [g, g_off] {
        let r = verify_theorem(&targets::neg_z_digamma(), &gg, &rect, 1e-8);
        assert!(r.pass, "{r:?}");
    }
}
