use num_complex::Complex64;

/// Kahan-compensated `sum_{n=first}^{last} f(n)`.
pub fn brute_sum<F: FnMut(u64) -> Complex64>(first: u64, last: u64, mut f: F) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    let mut c = Complex64::new(0.0, 0.0);
    for n in first..=last {
        let y = f(n) - c;
        let t = s + y;
        c = (t - s) - y;
        s = t;
    }
    s
}

/// `prod_{n=first}^{last} f(n)`, accumulated in logarithms.
pub fn brute_product<F: FnMut(u64) -> Complex64>(first: u64, last: u64, mut f: F) -> Complex64 {
    let mut log = Complex64::new(0.0, 0.0);
    let mut sign = Complex64::new(1.0, 0.0);
    for n in first..=last {
        let v = f(n);
        log += Complex64::new(v.norm().ln(), 0.0);
        sign *= v / v.norm();
    }
    sign * log.exp()
}
