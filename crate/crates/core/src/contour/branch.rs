use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::region::Path;
use crate::zeros::FunctionHandle;
use crate::{Error, Result};

const INITIAL_SAMPLES: usize = 64;
const MAX_SAMPLES: usize = 1 << 20;
const FLOOR_REL: f64 = 1e-12;
const MAX_LOG_MODULUS_STEP: f64 = 1.0;

/// Samples of a continuous determination of `ln f` along a path.
#[derive(Debug, Clone)]
pub struct BranchPath {
    pub path: Path,
    pub ts: Vec<f64>,
    pub points: Vec<Complex64>,
    /// Continuous `ln f` at each sample.
    pub values: Vec<Complex64>,
    pub f_values: Vec<Complex64>,
}

impl BranchPath {
    pub fn start_value(&self) -> Complex64 {
        self.values[0]
    }

    pub fn end_value(&self) -> Complex64 {
        *self.values.last().expect("at least two samples")
    }

    /// Change of the unwrapped argument along the whole path.
    pub fn arg_change(&self) -> f64 {
        self.end_value().im - self.start_value().im
    }

    /// `ln f` at an arbitrary parameter, on the branch of the nearest sample.
    pub fn value_at(&self, handle: &FunctionHandle, t: f64) -> Complex64 {
        let k = match self.ts.binary_search_by(|x| x.total_cmp(&t)) {
            Ok(k) => return self.values[k],
            Err(0) => 0,
            Err(k) if k >= self.ts.len() => self.ts.len() - 1,
            Err(k) => {
                if t - self.ts[k - 1] <= self.ts[k] - t {
                    k - 1
                } else {
                    k
                }
            }
        };
        let f = handle.eval(self.path.point(t));
        let d = (f / self.f_values[k]).arg();
        Complex64::new(f.norm().ln(), self.values[k].im + d)
    }
}

fn needs_split(fa: Complex64, fb: Complex64) -> bool {
    (fb / fa).arg().abs() >= FRAC_PI_2 || (fb.norm() / fa.norm()).ln().abs() > MAX_LOG_MODULUS_STEP
}

fn bad(f: Complex64) -> bool {
    !f.re.is_finite() || !f.im.is_finite()
}

/// Uniform grid, densified geometrically around known poles close to the
/// path so that even-order poles cannot alias a full turn between samples.
fn initial_grid(handle: &FunctionHandle, path: &Path) -> Vec<f64> {
    let mut ts: Vec<f64> = (0..=INITIAL_SAMPLES)
        .map(|k| k as f64 / INITIAL_SAMPLES as f64)
        .collect();
    let len = path.length();
    let h = len / INITIAL_SAMPLES as f64;
    for p in &handle.known_poles {
        let (tp, d) = path.closest(p.location);
        if d >= 2.0 * h || d == 0.0 {
            continue;
        }
        ts.push(tp);
        let mut step = d;
        while step < 2.0 * h {
            for s in [-step, step] {
                let t = tp + s / len;
                if (0.0..=1.0).contains(&t) {
                    ts.push(t);
                }
            }
            step *= 2.0;
        }
    }
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    ts
}

/// `FLOOR_REL` times the median modulus over the nine initial samples
/// centered on each sample.
fn local_floors(init: &[(f64, Complex64)]) -> Vec<f64> {
    let n = init.len();
    (0..n)
        .map(|i| {
            let lo = i.saturating_sub(4);
            let hi = (i + 5).min(n);
            let mut m: Vec<f64> = init[lo..hi].iter().map(|(_, f)| f.norm()).collect();
            m.sort_by(f64::total_cmp);
            FLOOR_REL * m[m.len() / 2]
        })
        .collect()
}

/// Tracks `ln f` continuously along `path`, starting from `seed`.
pub fn track_log(handle: &FunctionHandle, path: Path, seed: Complex64) -> Result<BranchPath> {
    let eval = |t: f64| handle.eval(path.point(t));
    let init: Vec<(f64, Complex64)> = initial_grid(handle, &path)
        .into_iter()
        .map(|t| (t, eval(t)))
        .collect();
    if let Some(&(t, _)) = init.iter().find(|(_, f)| bad(*f)) {
        return Err(Error::ZeroOnPath(path.point(t)));
    }
    let floors = local_floors(&init);
    let check = |t: f64, f: Complex64, floor: f64| -> Result<()> {
        if bad(f) || f.norm() <= floor {
            Err(Error::ZeroOnPath(path.point(t)))
        } else {
            Ok(())
        }
    };

    let mut ts = vec![init[0].0];
    let mut fs = vec![init[0].1];
    check(init[0].0, init[0].1, floors[0])?;
    let mut total = init.len();
    for (i, w) in init.windows(2).enumerate() {
        let floor = floors[i].min(floors[i + 1]);
        // Depth-first refinement keeps the output ordered.
        let mut stack = vec![(w[0], w[1])];
        while let Some(((ta, fa), (tb, fb))) = stack.pop() {
            if needs_split(fa, fb) {
                let tm = 0.5 * (ta + tb);
                if total >= MAX_SAMPLES || tm <= ta || tm >= tb {
                    return Err(Error::ZeroOnPath(path.point(tm)));
                }
                let fm = eval(tm);
                check(tm, fm, floor)?;
                total += 1;
                stack.push(((tm, fm), (tb, fb)));
                stack.push(((ta, fa), (tm, fm)));
            } else {
                check(tb, fb, floor)?;
                ts.push(tb);
                fs.push(fb);
            }
        }
    }

    let mut values = Vec::with_capacity(ts.len());
    let mut theta = seed.im;
    values.push(Complex64::new(fs[0].norm().ln(), theta));
    for k in 1..fs.len() {
        theta += (fs[k] / fs[k - 1]).arg();
        values.push(Complex64::new(fs[k].norm().ln(), theta));
    }
    let points = ts.iter().map(|&t| path.point(t)).collect();
    Ok(BranchPath {
        path,
        ts,
        points,
        values,
        f_values: fs,
    })
}

/// Principal logarithm of `f` at `z`.
pub fn principal_log(handle: &FunctionHandle, z: Complex64) -> Result<Complex64> {
    let f = handle.eval(z);
    if bad(f) || f.norm() == 0.0 {
        return Err(Error::ZeroOnPath(z));
    }
    Ok(f.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exp_winds_by_two_pi() {
        let h = FunctionHandle::new("exp", |z: Complex64| z.exp());
        let path = Path::Segment {
            a: Complex64::new(0.0, 0.0),
            b: Complex64::new(0.0, 2.0 * PI),
        };
        let bp = track_log(&h, path, Complex64::new(0.0, 0.0)).unwrap();
        assert!((bp.end_value() - Complex64::new(0.0, 2.0 * PI)).norm() < 1e-12);
    }

    #[test]
    fn through_a_zero_fails() {
        let h = FunctionHandle::new("id", |z: Complex64| z);
        let path = Path::Segment {
            a: Complex64::new(-1.0, 0.0),
            b: Complex64::new(1.0, 0.0),
        };
        assert!(matches!(
            track_log(&h, path, Complex64::new(0.0, PI)),
            Err(Error::ZeroOnPath(_))
        ));
    }
}
