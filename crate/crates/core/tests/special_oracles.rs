use littlewood::numerics::{
    a_coeff, b_coeff, b_coeff_recursion, b_coeff_series, digamma, ein, gamma, incomplete_zeta_q,
    lower_incomplete_gamma, polygamma,
};
use littlewood::Complex64;
use littlewood_oracle::special as oracle;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn grid(xs: &[f64], ys: &[f64]) -> Vec<Complex64> {
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| c(x, y)))
        .collect()
}

#[test]
fn gamma_matches_stirling() {
    for z in grid(
        &[-4.7, -2.3, -0.6, 0.3, 1.0, 2.5, 6.1],
        &[-5.0, -1.2, 0.0, 0.7, 4.0],
    ) {
        let e = (gamma(z).unwrap() - oracle::gamma(z)).norm() / oracle::gamma(z).norm();
        assert!(e < 1e-11, "Gamma({z}): {e:e}");
    }
}

#[test]
fn digamma_matches_two_oracles() {
    for z in grid(&[-6.5, -3.2, -0.4, 0.2, 1.7, 9.0], &[-3.0, 0.0, 0.5, 6.0]) {
        let e = rel(digamma(z).unwrap(), oracle::digamma(z));
        assert!(e < 1e-11, "psi({z}): {e:e}");
    }
    for z in grid(&[1.0, 2.5, 7.0], &[-2.0, 0.0, 0.3, 3.0]) {
        let e = rel(digamma(z).unwrap(), oracle::digamma_binet(z));
        assert!(e < 1e-11, "psi({z}) vs Binet: {e:e}");
    }
}

#[test]
fn polygamma_matches_hurwitz_sum() {
    for n in 1..=4 {
        for z in grid(&[-2.5, -0.3, 0.4, 1.0, 3.3, 12.0], &[-1.5, 0.0, 2.0]) {
            let e = rel(polygamma(n, z).unwrap(), oracle::polygamma(n, z));
            assert!(e < 1e-11, "psi^({n})({z}): {e:e}");
        }
    }
}

#[test]
fn lower_incomplete_gamma_matches_quadrature() {
    // 20 points with Re s in [0.5, 4] and |z| <= 5.
    let ss = [
        c(0.5, 0.0),
        c(1.3, 0.8),
        c(2.0, -1.5),
        c(3.1, 0.2),
        c(4.0, 2.0),
    ];
    let zs = [c(0.7, 0.0), c(-2.0, 1.0), c(3.0, -4.0), c(-4.5, -1.5)];
    for s in ss {
        for z in zs {
            let e = rel(
                lower_incomplete_gamma(s, z).unwrap(),
                oracle::lower_gamma_quad(s, z),
            );
            assert!(e < 1e-11, "gamma({s}, {z}): {e:e}");
        }
    }
}

#[test]
fn lower_incomplete_gamma_far_field_matches_quadrature() {
    let s = c(0.8, 0.3);
    for z in [c(20.0, 5.0), c(0.0, 40.0), c(-14.0, 25.0), c(35.0, -10.0)] {
        let e = rel(
            lower_incomplete_gamma(s, z).unwrap(),
            oracle::lower_gamma_quad(s, z),
        );
        assert!(e < 1e-11, "gamma({s}, {z}): {e:e}");
    }
}

#[test]
fn incomplete_zeta_matches_quadrature() {
    let ss = [c(1.5, 0.0), c(2.0, 1.0), c(3.5, -2.0), c(1.2, 0.4)];
    let zs = [
        c(0.5, 0.0),
        c(-3.0, 2.0),
        c(4.0, -3.0),
        c(0.0, 5.0),
        c(-5.0, 0.0),
    ];
    for s in ss {
        for z in zs {
            let e = rel(incomplete_zeta_q(s, z).unwrap(), oracle::zeta_q_quad(s, z));
            assert!(e < 1e-11, "Q({s}, {z}): {e:e}");
        }
    }
}

#[test]
fn ein_and_a2_match_quadrature() {
    for z in [
        c(0.5, 0.0),
        c(-3.0, 2.0),
        c(8.0, -1.0),
        c(15.0, 12.0),
        c(-6.0, 0.0),
    ] {
        let e1 = rel(ein(z), oracle::ein_quad(z));
        assert!(e1 < 1e-11, "Ein({z}): {e1:e}");
        assert!(rel(a_coeff(1, z).unwrap(), -oracle::ein_quad(z)) < 1e-11);
        let e2 = rel(a_coeff(2, z).unwrap(), oracle::a2_quad(z));
        assert!(e2 < 1e-11, "a2({z}): {e2:e}");
    }
}

#[test]
fn b_coefficients_match_quadrature() {
    for k in 1..=3 {
        for z in [
            c(0.5, 0.0),
            c(1.0, 0.0),
            c(3.0, 0.0),
            c(6.0, 0.0),
            c(2.0, 3.0),
            c(9.0, 1.0),
        ] {
            let e = rel(b_coeff(k, z).unwrap(), oracle::b_quad(k, z));
            assert!(e < 1e-11, "b_{k}({z}): {e:e}");
        }
    }
}

#[test]
fn b_series_and_recursion_overlap() {
    for k in [2, 3] {
        for x in [0.5, 1.0, 3.0, 6.0] {
            let z = c(x, 0.0);
            let d = (b_coeff_series(k, z).unwrap() - b_coeff_recursion(k, z).unwrap()).norm();
            assert!(d < 1e-9, "b_{k}({x}): {d:e}");
        }
    }
}
