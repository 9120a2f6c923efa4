use num_complex::Complex64;
use std::sync::OnceLock;

const ORDER: usize = 20;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton on `P_20`.
fn nodes() -> &'static [(f64, f64)] {
    static CELL: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let n = ORDER;
        (0..n)
            .map(|i| {
                let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
                let mut dp = 0.0;
                for _ in 0..100 {
                    let (mut p0, mut p1) = (1.0, x);
                    for k in 2..=n {
                        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                        p0 = p1;
                        p1 = p2;
                    }
                    dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                    let dx = p1 / dp;
                    x -= dx;
                    if dx.abs() < 1e-16 {
                        break;
                    }
                }
                (x, 2.0 / ((1.0 - x * x) * dp * dp))
            })
            .collect()
    })
}

fn panel<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Complex64 {
    let (m, h) = (0.5 * (a + b), 0.5 * (b - a));
    nodes()
        .iter()
        .map(|&(x, w)| f(m + h * x) * w)
        .sum::<Complex64>()
        * h
}

/// Adaptive 20-point Gauss-Legendre integral of `f` over `[a, b]`: the panel
/// with the largest two-level discrepancy is bisected until the total falls
/// below `tol` (relative to the integral when that is larger) or 4000 panels.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Complex64 {
    struct Panel {
        a: f64,
        b: f64,
        value: Complex64,
        err: f64,
    }
    let make = |a: f64, b: f64| {
        let m = 0.5 * (a + b);
        let whole = panel(&f, a, b);
        let value = panel(&f, a, m) + panel(&f, m, b);
        Panel {
            a,
            b,
            value,
            err: (value - whole).norm(),
        }
    };
    let pieces = 16;
    let h = (b - a) / pieces as f64;
    let mut panels: Vec<Panel> = (0..pieces)
        .map(|i| make(a + i as f64 * h, a + (i + 1) as f64 * h))
        .collect();
    while panels.len() < 4000 {
        let total: Complex64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        if err <= tol.max(tol * total.norm()) {
            break;
        }
        let (i, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .expect("panels nonempty");
        let p = panels.swap_remove(i);
        let m = 0.5 * (p.a + p.b);
        panels.push(make(p.a, m));
        panels.push(make(m, p.b));
    }
    panels.iter().map(|p| p.value).sum()
}

/// Integral of `f(z)` along the straight segment from `a` to `b`.
pub fn integrate_segment<F: Fn(Complex64) -> Complex64>(
    f: F,
    a: Complex64,
    b: Complex64,
    tol: f64,
) -> Complex64 {
    let d = b - a;
    integrate(|t| f(a + d * t) * d, 0.0, 1.0, tol)
}
