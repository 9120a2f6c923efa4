use num_complex::Complex64;

const TERMS: usize = 60;

/// Riemann zeta by Borwein's alternating-series acceleration, `s != 1`.
pub fn zeta(s: Complex64) -> Complex64 {
    let n = TERMS;
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = vec![0.0f64; n + 1];
    let mut term = 1.0 / n as f64;
    let mut acc = term;
    d[0] = n as f64 * acc;
    for i in 1..=n {
        term *=
            (n + i - 1) as f64 * (n - i + 1) as f64 * 4.0 / ((2 * i - 1) as f64 * (2 * i) as f64);
        acc += term;
        d[i] = n as f64 * acc;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (d[k] - d[n]) * (-s * ((k + 1) as f64).ln()).exp();
    }
    let two = (Complex64::new(1.0, 0.0) - s) * 2f64.ln();
    -sum / (d[n] * (1.0 - two.exp()))
}
