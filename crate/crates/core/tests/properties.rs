use littlewood::contour::{edge_branches, RectRegion};
use littlewood::numerics::{digamma, polygamma};
use littlewood::products::{
    closed_form_from_roots, product_closed_form, product_mathworld_form, InverseZPolynomial,
};
use littlewood::series::{catalog_zero_sum, CatalogFunction};
use littlewood::zeros::{count_zeros_in_rect, targets, FunctionHandle};
use littlewood::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pole_distance(z: Complex64) -> f64 {
    if z.re > 0.5 {
        return z.norm();
    }
    (z - c(z.re.round(), 0.0)).norm()
}

/// A root off the positive integers.
fn root() -> impl Strategy<Value = Complex64> {
    (-3.0f64..3.0, -2.0f64..2.0)
        .prop_filter("not near a positive integer", |(x, y)| {
            y.abs() > 0.05 || (x - x.round()).abs() > 0.05 || x.round() <= 0.0
        })
        .prop_filter("not near zero", |(x, y)| x.hypot(*y) > 0.2)
        .prop_map(|(x, y)| c(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn digamma_recurrence(x in -10.0f64..10.0, y in -10.0f64..10.0) {
        let z = c(x, y);
        prop_assume!(pole_distance(z) >= 0.1 && pole_distance(z + 1.0) >= 0.1);
        let d = digamma(z + 1.0).unwrap() - digamma(z).unwrap() - z.inv();
        prop_assert!(d.norm() < 1e-12, "z = {z}: {:e}", d.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polygamma_central_difference_is_second_order(n in 1u32..=4, x in 0.5f64..5.0, y in -3.0f64..3.0) {
        let z = c(x, y);
        let fd = |h: f64| {
            (polygamma(n - 1, z + h).unwrap() - polygamma(n - 1, z - h).unwrap()) / (2.0 * h)
        };
        let exact = polygamma(n, z).unwrap();
        let e1 = (exact - fd(0.02)).norm();
        let e2 = (exact - fd(0.01)).norm();
        prop_assert!((3.5..4.5).contains(&(e1 / e2)), "ratio {}", e1 / e2);
    }

    #[test]
    fn closed_form_ignores_root_order(r in prop::collection::vec(root(), 1..4),
                                      s in prop::collection::vec(root(), 1..4),
                                      shift in 0usize..3) {
        let base = closed_form_from_roots(&r, &s).unwrap();
        let mut r2 = r.clone();
        r2.rotate_left(shift % r.len());
        r2.reverse();
        let mut s2 = s.clone();
        s2.rotate_right(shift % s.len());
        let other = closed_form_from_roots(&r2, &s2).unwrap();
        prop_assert!((base - other).norm() <= 1e-12 * base.norm().max(1.0));
    }

    #[test]
    fn mathworld_form_agrees(r1 in root(), r2 in root(), s1 in root()) {
        // Fix s2 by the balance condition a_1 = b_1, i.e. sum r = sum s.
        let s2 = r1 + r2 - s1;
        prop_assume!(s2.norm() > 0.2);
        prop_assume!((s2.re - s2.re.round()).abs() > 0.05 || s2.im.abs() > 0.05 || s2.re.round() <= 0.0);
        let p = InverseZPolynomial::from_roots(&[r1, r2]).unwrap();
        let q = InverseZPolynomial::from_roots(&[s1, s2]).unwrap();
        let a = product_closed_form(&p, &q).unwrap();
        let b = product_mathworld_form(&p, &q).unwrap();
        prop_assert!((a - b).norm() <= 1e-10 * a.norm().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn exp_catalog_is_exact(x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let a = c(x, y);
        prop_assume!((a - 1.0).norm() > 1e-3);
        let v = catalog_zero_sum(CatalogFunction::ExpMinusAZZ2 { a }).unwrap();
        prop_assert!(v.value.norm() < 1e-14);
    }
}

fn random_rect() -> impl Strategy<Value = (RectRegion, f64)> {
    (
        -4.0f64..2.0,
        0.6f64..4.0,
        -2.0f64..0.5,
        0.6f64..2.5,
        0.2f64..0.8,
    )
        .prop_map(|(x1, w, y1, h, f)| (RectRegion::new(x1, x1 + w, y1, y1 + h).unwrap(), f))
}

fn additive(handle: &FunctionHandle, rect: &RectRegion, f: f64) -> Result<(), TestCaseError> {
    let whole = count_zeros_in_rect(handle, rect).unwrap();
    let [left, right] = rect.split_x(f);
    let parts =
        count_zeros_in_rect(handle, &left).unwrap() + count_zeros_in_rect(handle, &right).unwrap();
    prop_assert_eq!(whole, parts, "{} on {:?}", handle.name, rect);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn count_additive_cos((rect, f) in random_rect()) {
        additive(&targets::cos_pi(), &rect, f)?;
    }

    #[test]
    fn count_additive_sine((rect, f) in random_rect()) {
        additive(&targets::sine(), &rect, f)?;
    }

    #[test]
    fn count_additive_digamma((rect, f) in random_rect()) {
        additive(&targets::neg_z_digamma(), &rect, f)?;
    }

    #[test]
    fn winding_matches_count((rect, _f) in random_rect()) {
        let h = targets::cos_pi();
        let n = count_zeros_in_rect(&h, &rect).unwrap();
        // Only compare when no nudge was needed.
        if let Ok(e) = edge_branches(&h, &rect) {
            prop_assert!((e.winding() - n as f64).abs() < 1e-6, "{} vs {}", e.winding(), n);
        }
    }
}
