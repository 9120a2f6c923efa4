//! Compensated summation.

use num_complex::Complex64;

/// Neumaier-compensated accumulator for complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    re: (f64, f64),
    im: (f64, f64),
}

fn neumaier(acc: &mut (f64, f64), x: f64) {
    let (s, c) = *acc;
    let t = s + x;
    let c = if s.abs() >= x.abs() {
        c + ((s - t) + x)
    } else {
        c + ((x - t) + s)
    };
    *acc = (t, c);
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        neumaier(&mut self.re, z.re);
        neumaier(&mut self.im, z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

impl std::iter::FromIterator<Complex64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for z in iter {
            s.add(z);
        }
        s
    }
}

/// Sum of an iterator of complex terms with compensation.
pub fn csum<I: IntoIterator<Item = Complex64>>(iter: I) -> Complex64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

/// Series truncation contract shared by every power series in the crate:
/// stop once `|term| <= 1e-16 |partial|` holds for three consecutive terms,
/// giving up after `cap` terms.
#[derive(Debug, Clone, Copy)]
pub struct Truncation {
    pub rel: f64,
    pub consecutive: usize,
    pub cap: usize,
}

impl Default for Truncation {
    fn default() -> Self {
        Self {
            rel: 1e-16,
            consecutive: 3,
            cap: 1_000_000,
        }
    }
}

impl Truncation {
    /// Sums `term(n)` for `n = start, start + 1, ...` under the contract.
    pub fn sum<F>(&self, start: usize, mut term: F) -> crate::Result<(Complex64, usize)>
    where
        F: FnMut(usize) -> Complex64,
    {
        let mut acc = CompensatedSum::new();
        let mut small = 0;
        for (used, n) in (start..).enumerate() {
            if used >= self.cap {
                return Err(crate::Error::NonConvergence { terms: used });
            }
            let t = term(n);
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(crate::Error::Overflow(format!("term {n} is not finite")));
            }
            acc.add(t);
            if t.norm() <= self.rel * acc.value().norm() {
                small += 1;
                if small >= self.consecutive {
                    return Ok((acc.value(), used + 1));
                }
            } else {
                small = 0;
            }
        }
        unreachable!()
    }
}
