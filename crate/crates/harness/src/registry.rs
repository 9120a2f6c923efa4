//! The check catalog.

use crate::checks::{incomplete, polygamma, products, series, windows, CheckFn};
use crate::params::{p, ParamDefault, ParamKind};

/// Module that owns the mathematics of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Numerics,
    Series,
    Products,
    ZeroFinder,
    Verifier,
}

/// A registered check.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub name: &'static str,
    pub route: Route,
    pub params: &'static [ParamDefault],
    pub tolerance: f64,
    pub tag: &'static str,
    pub(crate) run: CheckFn,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec")
            .field("name", &self.name)
            .field("route", &self.route)
            .field("params", &self.params)
            .field("tolerance", &self.tolerance)
            .field("tag", &self.tag)
            .finish()
    }
}

/// Identities the catalog must cover, one tag each.
pub const IN_SCOPE: &[&str] = &[
    "thm1.1:cos",
    "thm1.1:exp-level",
    "thm1.1:digamma",
    "sum:half-integers",
    "sum:6.1.27",
    "eq2.2",
    "rem2.1",
    "thm2.1",
    "eq2.3",
    "eq2.4",
    "sum:6.1.39",
    "eq2.6",
    "eq2.7",
    "eq2.8",
    "eq2.9",
    "lem2.1:gamma-level",
    "rem3:gamma-level",
    "rem3:exp-quadratic",
    "rem3:exp-2z",
    "rem3:sin-level",
    "rem3:cos-level",
    "rem3:bessel-level",
    "sum:zeta-zeros",
    "eq3.1",
    "eq3.2",
    "eq3.3",
    "eq3.4",
    "eq3.5",
    "eq3.6",
    "rem3.1:ein",
    "rem3.1:a2",
    "rem3.2",
    "eq3.7",
    "eq3.8",
    "eq3.9",
    "eq3.10",
    "eq4.1",
    "sum:rho-squared",
    "eq4.2",
    "eq4.3",
    "eq4.4",
    "eq4.5",
    "eq4.6",
    "eq4.8",
    "thm4.1a",
    "thm4.1b",
    "thm4.1c",
];

use ParamKind::{Bool as B, Complex as C, Int as I, Real as R, Text as T};

const SERIES_BUDGET: [ParamDefault; 2] = [p("terms", I, "100000"), p("order", I, "4")];
const DIGAMMA_COUNT: ParamDefault = p("count", I, "10000");

const fn spec(
    name: &'static str,
    route: Route,
    params: &'static [ParamDefault],
    tolerance: f64,
    tag: &'static str,
    run: CheckFn,
) -> CheckSpec {
    CheckSpec {
        name,
        route,
        params,
        tolerance,
        tag,
        run,
    }
}

macro_rules! with_budget {
    ($($x:expr),* $(,)?) => {
        &[$($x,)* SERIES_BUDGET[0], SERIES_BUDGET[1]]
    };
}

const POLY_BUDGET: [ParamDefault; 2] = [p("real_count", I, "500"), p("half_width", R, "10")];

static CHECKS: &[CheckSpec] = &[
    spec(
        "thm1.1_cos_window",
        Route::Verifier,
        &[
            p("x1", R, "-3.25"),
            p("x2", R, "3.25"),
            p("y1", R, "-2.5"),
            p("y2", R, "2.3"),
            p("g_center", C, "0"),
            p("g_order", I, "3"),
        ],
        1e-8,
        "thm1.1:cos",
        windows::cos,
    ),
    spec(
        "thm1.1_exp_window",
        Route::Verifier,
        &[
            p("a", C, "3"),
            p("x1", R, "-3.1"),
            p("x2", R, "2.9"),
            p("y1", R, "-7.4"),
            p("y2", R, "7.7"),
            p("g_center", C, "0"),
            p("g_order", I, "3"),
        ],
        1e-8,
        "thm1.1:exp-level",
        windows::exp_level,
    ),
    spec(
        "thm1.1_digamma_window",
        Route::Verifier,
        &[
            p("x1", R, "-4.6"),
            p("x2", R, "2.3"),
            p("y1", R, "-1.2"),
            p("y2", R, "1.1"),
            p("g_center", C, "0"),
            p("g_order", I, "3"),
        ],
        1e-8,
        "thm1.1:digamma",
        windows::digamma,
    ),
    spec(
        "cos_half_integer_squares",
        Route::Series,
        &SERIES_BUDGET,
        1e-10,
        "sum:half-integers",
        series::half_int_sq,
    ),
    spec(
        "hansen6.1.27_sin_shift",
        Route::Series,
        with_budget![p("a", C, "1.3"), p("b", C, "0.4"), p("c", C, "0.2+0.1i")],
        1e-8,
        "sum:6.1.27",
        series::hansen,
    ),
    spec(
        "alt6.1.39_alternating",
        Route::Series,
        with_budget![p("a", R, "1"), p("b", R, "0.3")],
        1e-10,
        "sum:6.1.39",
        series::alternating,
    ),
    spec(
        "eq2.2_product",
        Route::Products,
        &[
            p("r1", C, "0.3+0.2i"),
            p("r2", C, "-1.7"),
            p("s1", C, "0.5"),
            p("n_max", I, "1000000"),
        ],
        1e-10,
        "eq2.2",
        products::general,
    ),
    spec(
        "rem2.1_mathworld_form",
        Route::Products,
        &[
            p("r1", C, "0.3+0.2i"),
            p("r2", C, "-1.7"),
            p("s1", C, "0.5"),
        ],
        1e-12,
        "rem2.1",
        products::mathworld,
    ),
    spec(
        "eq2.3_integer_root",
        Route::Products,
        &[
            p("k", I, "2"),
            p("r2", C, "0.35-0.4i"),
            p("s1", C, "-0.6"),
            p("n_max", I, "1000000"),
        ],
        1e-10,
        "eq2.3",
        products::integer_root,
    ),
    spec(
        "thm2.1_integer_root_poly",
        Route::Products,
        &[
            p("p", T, "1,-2,1.5,-0.5"),
            p("q", T, "1,-2,-0.44"),
            p("k", I, "1"),
            p("n_max", I, "1000000"),
        ],
        1e-10,
        "thm2.1",
        products::integer_root_poly,
    ),
    spec(
        "eq2.4_integer_root_k",
        Route::Products,
        &[p("k", I, "3"), p("n_max", I, "1000000")],
        1e-5,
        "eq2.4",
        products::square_root_k,
    ),
    spec(
        "eq2.6_sqrt_cube",
        Route::Series,
        with_budget![p("c", C, "i")],
        1e-6,
        "eq2.6",
        series::sqrt_cube,
    ),
    spec(
        "eq2.7_sqrt_cube_limit",
        Route::Series,
        &SERIES_BUDGET,
        1e-6,
        "eq2.7",
        series::sqrt_cube_limit,
    ),
    spec(
        "eq2.8_three_halves",
        Route::Series,
        with_budget![p("a", C, "1")],
        1e-5,
        "eq2.8",
        series::three_halves,
    ),
    spec(
        "eq2.9_exp_shift",
        Route::Series,
        with_budget![p("b", C, "1")],
        1e-8,
        "eq2.9",
        series::exp_shift,
    ),
    spec(
        "lemma2.1_gamma_level",
        Route::Series,
        &[p("a", C, "0.5")],
        1e-12,
        "lem2.1:gamma-level",
        series::gamma_level_closed,
    ),
    spec(
        "rem3_gamma_level_zeros",
        Route::ZeroFinder,
        &[p("a", C, "-1.1544313298030657"), p("half_width", R, "20.5")],
        1e-2,
        "rem3:gamma-level",
        series::gamma_level_enumerated,
    ),
    spec(
        "catalog_exp_quadratic",
        Route::Series,
        &[p("a", C, "0.5")],
        1e-12,
        "rem3:exp-quadratic",
        series::catalog_exp_quad,
    ),
    spec(
        "catalog_exp_minus_2z",
        Route::Series,
        &[],
        1e-12,
        "rem3:exp-2z",
        series::catalog_exp_2z,
    ),
    spec(
        "catalog_sin_level",
        Route::Series,
        &[p("a", C, "0.5")],
        1e-12,
        "rem3:sin-level",
        series::catalog_sin,
    ),
    spec(
        "catalog_cos_level",
        Route::Series,
        &[p("a", C, "0.3")],
        1e-12,
        "rem3:cos-level",
        series::catalog_cos,
    ),
    spec(
        "catalog_bessel_level",
        Route::Series,
        &[p("alpha", R, "1.5"), p("a", C, "0.2")],
        1e-12,
        "rem3:bessel-level",
        series::catalog_bessel,
    ),
    spec(
        "zeta_zero_sum",
        Route::ZeroFinder,
        &[p("zeros", T, ""), p("tail", B, "true")],
        5e-3,
        "sum:zeta-zeros",
        incomplete::zeta_zeros,
    ),
    spec(
        "eq3.1_gamma_series",
        Route::Numerics,
        &[p("s", C, "0.7+0.2i"), p("z", C, "9+3i")],
        1e-10,
        "eq3.1",
        incomplete::gamma_series,
    ),
    spec(
        "eq3.2_incomplete_gamma_zeros",
        Route::ZeroFinder,
        &[p("s", C, "0.4"), p("route", T, "enumeration")],
        1e-6,
        "eq3.2",
        incomplete::eq32,
    ),
    spec(
        "eq3.3_bernoulli_generating",
        Route::Numerics,
        &[p("t", C, "1.3+0.4i")],
        1e-13,
        "eq3.3",
        incomplete::bernoulli_generating,
    ),
    spec(
        "eq3.4_incomplete_zeta_series",
        Route::Numerics,
        &[p("s", C, "2.5+0.5i"), p("z", R, "1.5")],
        1e-11,
        "eq3.4",
        incomplete::zeta_series,
    ),
    spec(
        "eq3.5_incomplete_zeta_zeros",
        Route::ZeroFinder,
        &[p("s", C, "0.4"), p("route", T, "algebraic")],
        1e-10,
        "eq3.5",
        incomplete::eq35,
    ),
    spec(
        "eq3.6_incomplete_gamma_s_zeros",
        Route::ZeroFinder,
        &[p("z", C, "0.4"), p("route", T, "enumeration")],
        1e-6,
        "eq3.6",
        incomplete::eq36,
    ),
    spec(
        "rem3.1_ein_series",
        Route::Numerics,
        &[p("z", C, "4+2i")],
        1e-11,
        "rem3.1:ein",
        incomplete::ein_series,
    ),
    spec(
        "rem3.1_a2_integral",
        Route::Numerics,
        &[p("z", C, "7+1i")],
        1e-11,
        "rem3.1:a2",
        incomplete::a2_integral,
    ),
    spec(
        "rem3.2_a2_asymptotic",
        Route::Numerics,
        &[p("z", R, "40")],
        1e-9,
        "rem3.2",
        incomplete::a2_asymptotic,
    ),
    spec(
        "eq3.7_b1_integral",
        Route::Numerics,
        &[p("z", C, "1.2+0.5i")],
        1e-10,
        "eq3.7",
        incomplete::b1_integral,
    ),
    spec(
        "eq3.8_b_recursion",
        Route::Numerics,
        &[p("k", I, "3"), p("z", C, "2")],
        1e-9,
        "eq3.8",
        incomplete::b_recursion,
    ),
    spec(
        "eq3.9_q_expansion",
        Route::Numerics,
        &[p("s", C, "0.2"), p("z", C, "1.5"), p("terms", I, "60")],
        1e-10,
        "eq3.9",
        incomplete::q_expansion,
    ),
    spec(
        "eq3.10_incomplete_zeta_s_zeros",
        Route::ZeroFinder,
        &[p("z", C, "0.4"), p("route", T, "enumeration")],
        1e-6,
        "eq3.10",
        incomplete::eq310,
    ),
    spec(
        "eq4.1_digamma_laurent",
        Route::Numerics,
        &[p("x", C, "0.3+0.1i"), p("terms", I, "80")],
        1e-12,
        "eq4.1",
        polygamma::laurent_digamma,
    ),
    spec(
        "digamma_sum_rho_sq",
        Route::ZeroFinder,
        &[DIGAMMA_COUNT],
        1e-4,
        "sum:rho-squared",
        polygamma::sum_rho_sq,
    ),
    spec(
        "eq4.2_digamma_reciprocal",
        Route::ZeroFinder,
        &[DIGAMMA_COUNT],
        1e-3,
        "eq4.2",
        polygamma::reciprocal,
    ),
    spec(
        "eq4.3_digamma_log_limit",
        Route::ZeroFinder,
        &[DIGAMMA_COUNT],
        1e-3,
        "eq4.3",
        polygamma::log_limit,
    ),
    spec(
        "eq4.4_digamma_shift",
        Route::ZeroFinder,
        &[p("p", R, "0.5"), DIGAMMA_COUNT],
        1e-4,
        "eq4.4",
        polygamma::shift,
    ),
    spec(
        "eq4.5_digamma_at_pole",
        Route::ZeroFinder,
        &[p("k", I, "2"), DIGAMMA_COUNT],
        1e-4,
        "eq4.5",
        polygamma::at_pole,
    ),
    spec(
        "eq4.6_digamma_at_zero",
        Route::ZeroFinder,
        &[p("k", I, "1"), DIGAMMA_COUNT],
        1e-4,
        "eq4.6",
        polygamma::at_zero,
    ),
    spec(
        "eq4.8_polygamma_laurent",
        Route::Numerics,
        &[p("n", I, "2"), p("z", C, "0.3-0.2i"), p("terms", I, "120")],
        1e-11,
        "eq4.8",
        polygamma::laurent_polygamma,
    ),
    spec(
        "thm4.1a_polygamma_n2",
        Route::ZeroFinder,
        &[
            p("n", I, "2"),
            p("real_count", I, "2000"),
            p("half_width", R, "20"),
        ],
        1e-2,
        "thm4.1a",
        polygamma::first_power,
    ),
    spec(
        "thm4.1b_polygamma_n2_j2",
        Route::ZeroFinder,
        &[
            p("n", I, "2"),
            p("j", I, "2"),
            POLY_BUDGET[0],
            POLY_BUDGET[1],
        ],
        1e-2,
        "thm4.1b",
        polygamma::middle_power,
    ),
    spec(
        "thm4.1c_polygamma_n3",
        Route::ZeroFinder,
        &[p("n", I, "3"), POLY_BUDGET[0], POLY_BUDGET[1]],
        1e-2,
        "thm4.1c",
        polygamma::top_power,
    ),
];

/// All checks, sorted by name.
pub fn list_checks() -> Vec<CheckSpec> {
    let mut v = CHECKS.to_vec();
    v.sort_by(|a, b| a.name.cmp(b.name));
    v
}

/// Looks up a check by exact name.
pub fn find_check(name: &str) -> Option<CheckSpec> {
    CHECKS.iter().find(|c| c.name == name).copied()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn names_sorted_and_unique() {
        let names: Vec<&str> = list_checks().iter().map(|c| c.name).collect();
        assert!(names.len() >= 25);
        assert!(names.windows(2).all(|w| w[0] < w[1]));
        assert!(names.contains(&"eq2.7_sqrt_cube_limit"));
        assert!(names.contains(&"thm4.1b_polygamma_n2_j2"));
        assert_eq!(names.iter().filter(|n| n.starts_with("eq2.")).count(), 7);
    }

    #[test]
    fn tags_biject_with_scope() {
        let tags: Vec<&str> = list_checks().iter().map(|c| c.tag).collect();
        let set: BTreeSet<&str> = tags.iter().copied().collect();
        assert_eq!(set.len(), tags.len(), "a tag is used twice");
        let scope: BTreeSet<&str> = IN_SCOPE.iter().copied().collect();
        assert_eq!(scope.len(), IN_SCOPE.len(), "scope lists a tag twice");
        assert_eq!(set, scope);
    }

    #[test]
    fn defaults_validate() {
        for c in list_checks() {
            let mut ps = crate::params::Params::from_defaults(c.params);
            for d in c.params {
                ps.set(d.key, d.default)
                    .unwrap_or_else(|e| panic!("{}: {e}", c.name));
            }
            assert!(c.tolerance > 0.0);
        }
    }
}
