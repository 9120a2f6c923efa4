use num_complex::Complex64;

use crate::{Error, Result};

/// Largest supported degree in `1/z`.
pub const MAX_DEGREE: usize = 12;
const MERGE_RADIUS: f64 = 1e-8;
const MAX_SWEEPS: usize = 200;

/// `P(z) = sum_i a_i z^{-i}` with `a_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseZPolynomial {
    coeffs: Vec<Complex64>,
}

impl InverseZPolynomial {
    /// Builds the polynomial from `a_0, ..., a_p`; trailing zeros are dropped.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() == 0.0) {
            coeffs.pop();
        }
        match coeffs.first() {
            Some(a0) if (a0 - 1.0).norm() < 1e-14 => {}
            _ => return Err(Error::Precondition("a_0 must equal 1".into())),
        }
        if coeffs.len() - 1 > MAX_DEGREE {
            return Err(Error::Precondition(format!(
                "degree {} exceeds the cap {MAX_DEGREE}",
                coeffs.len() - 1
            )));
        }
        Ok(Self { coeffs })
    }

    /// Real-coefficient convenience constructor.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `P` with prescribed nonzero roots `r_i`: `prod (1 - r_i/z)`.
    pub fn from_roots(roots: &[Complex64]) -> Result<Self> {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = c.clone();
            next.push(Complex64::new(0.0, 0.0));
            for (i, &ci) in c.iter().enumerate() {
                next[i + 1] -= r * ci;
            }
            c = next;
        }
        Self::new(c)
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `a_i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    /// `P(z)` by Horner's rule in `w = 1/z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let w = z.inv();
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w + c)
    }

    /// Coefficients of `ln P` in powers of `w = 1/z`, indices `1..=count`.
    pub fn log_coeffs(&self, count: usize) -> Vec<Complex64> {
        let mut l = vec![Complex64::new(0.0, 0.0); count + 1];
        for k in 1..=count {
            let mut acc = self.coeff(k) * k as f64;
            for j in 1..k {
                acc -= l[j] * j as f64 * self.coeff(k - j);
            }
            l[k] = acc / k as f64;
        }
        l
    }

    /// Root modulus bound in the `z` plane.
    pub fn root_bound(&self) -> f64 {
        1.0 + self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

fn horner_with_derivative(c: &[Complex64], w: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ck in c.iter().rev() {
        dp = dp * w + p;
        p = p * w + ck;
    }
    (p, dp)
}

/// Roots `r_i` of `P`, repeated by multiplicity, from Aberth iteration on
/// the monic polynomial in `w = 1/z`.
pub fn poly_roots(poly: &InverseZPolynomial) -> Result<Vec<Complex64>> {
    let p = poly.degree();
    if p == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    let lead = poly.coeffs[p];
    // Monic in w, ascending coefficients.
    let c: Vec<Complex64> = poly.coeffs.iter().map(|a| a / lead).collect();
    let radius = 1.0 + c[..p].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut w: Vec<Complex64> = (0..p)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / p as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, theta)
        })
        .collect();
    let scale = |x: Complex64| -> f64 {
        c.iter()
            .enumerate()
            .map(|(k, ck)| ck.norm() * x.norm().powi(k as i32))
            .sum()
    };
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut max_step = 0.0f64;
        for i in 0..p {
            let (v, dv) = horner_with_derivative(&c, w[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..p)
                .filter(|&j| j != i)
                .map(|j| (w[i] - w[j]).inv())
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                w[i] -= step;
                max_step = max_step.max(step.norm() / w[i].norm().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    let residual_ok = w
        .iter()
        .all(|&x| horner_with_derivative(&c, x).0.norm() <= 1e-12 * scale(x));
    if !converged && !residual_ok {
        return Err(Error::NonConvergence { terms: MAX_SWEEPS });
    }
    polish_clusters(&c, &mut w);
    let roots: Vec<Complex64> = w.iter().map(|x| x.inv()).collect();
    Ok(merge_clusters(roots))
}

const CLUSTER_RADIUS: f64 = 1e-5;

fn derivative(c: &[Complex64]) -> Vec<Complex64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, ck)| ck * k as f64)
        .collect()
}

/// Aberth approximations to an m-fold root scatter by about `eps^(1/m)`.
/// Each such cluster is replaced by the Newton root of `p^(m-1)` started
/// from the cluster mean.
fn polish_clusters(c: &[Complex64], w: &mut [Complex64]) {
    let n = w.len();
    let mut done = vec![false; n];
    for i in 0..n {
        if done[i] {
            continue;
        }
        let members: Vec<usize> = (i..n)
            .filter(|&j| !done[j] && (w[j] - w[i]).norm() < CLUSTER_RADIUS * w[i].norm().max(1.0))
            .collect();
        for &j in &members {
            done[j] = true;
        }
        let m = members.len();
        if m < 2 {
            continue;
        }
        let mut d = c.to_vec();
        for _ in 1..m {
            d = derivative(&d);
        }
        let mut x = members.iter().map(|&j| w[j]).sum::<Complex64>() / m as f64;
        for _ in 0..50 {
            let (v, dv) = horner_with_derivative(&d, x);
            if dv.norm() == 0.0 {
                break;
            }
            let step = v / dv;
            x -= step;
            if step.norm() <= 1e-16 * x.norm().max(1e-300) {
                break;
            }
        }
        let spread = members
            .iter()
            .map(|&j| (w[j] - x).norm())
            .fold(0.0, f64::max);
        if spread < CLUSTER_RADIUS * x.norm().max(1.0) {
            for &j in &members {
                w[j] = x;
            }
        }
    }
}

/// Replaces each cluster of roots closer than the merge radius by its mean.
fn merge_clusters(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    let n = roots.len();
    let mut group = vec![usize::MAX; n];
    for i in 0..n {
        if group[i] != usize::MAX {
            continue;
        }
        group[i] = i;
        for j in i + 1..n {
            if group[j] == usize::MAX
                && (roots[i] - roots[j]).norm() < MERGE_RADIUS * roots[i].norm().max(1.0)
            {
                group[j] = i;
            }
        }
    }
    for g in 0..n {
        let members: Vec<usize> = (0..n).filter(|&k| group[k] == g).collect();
        if members.len() > 1 {
            let mean = members.iter().map(|&k| roots[k]).sum::<Complex64>() / members.len() as f64;
            for k in members {
                roots[k] = mean;
            }
        }
    }
    roots
}

/// Distinct roots with their multiplicities.
pub fn root_multiplicities(roots: &[Complex64]) -> Vec<(Complex64, usize)> {
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    for &r in roots {
        match out.iter_mut().find(|(x, _)| *x == r) {
            Some(entry) => entry.1 += 1,
            None => out.push((r, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_re(mut v: Vec<Complex64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re));
        v.iter().map(|z| z.re).collect()
    }

    #[test]
    fn symmetric_quadratic() {
        let p = InverseZPolynomial::from_real(&[1.0, 0.0, -0.25]).unwrap();
        let r = sorted_re(poly_roots(&p).unwrap());
        assert!((r[0] + 0.5).abs() < 1e-14 && (r[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn golden_ratio_roots() {
        let p = InverseZPolynomial::from_real(&[1.0, -1.0, -1.0]).unwrap();
        let r = sorted_re(poly_roots(&p).unwrap());
        let s5 = 5f64.sqrt();
        assert!((r[0] - (1.0 - s5) / 2.0).abs() < 1e-14);
        assert!((r[1] - (1.0 + s5) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn double_root_is_merged() {
        let r0 = Complex64::new(0.7, 0.2);
        let p = InverseZPolynomial::from_roots(&[r0, r0, Complex64::new(-2.0, 0.0)]).unwrap();
        let roots = poly_roots(&p).unwrap();
        let m = root_multiplicities(&roots);
        assert_eq!(m.len(), 2);
        let (x, k) = m.iter().find(|(_, k)| *k == 2).copied().unwrap();
        assert_eq!(k, 2);
        assert!((x - r0).norm() < 1e-7);
    }

    #[test]
    fn validation() {
        assert!(InverseZPolynomial::from_real(&[2.0, 1.0]).is_err());
        assert!(InverseZPolynomial::from_real(&[1.0; 14]).is_err());
        assert!(poly_roots(&InverseZPolynomial::one()).is_err());
    }

    #[test]
    fn log_coeffs_match_closed_form() {
        // ln(1 - a w) = -a w - a^2 w^2/2 - ...
        let p = InverseZPolynomial::from_real(&[1.0, -0.3]).unwrap();
        let l = p.log_coeffs(4);
        for k in 1..=4 {
            let want = -(0.3f64.powi(k as i32)) / k as f64;
            assert!((l[k].re - want).abs() < 1e-16);
        }
    }
}
