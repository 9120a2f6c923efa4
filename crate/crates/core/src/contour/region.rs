use num_complex::Complex64;

use crate::{Error, Result};

/// Axis-aligned rectangle `[x1, x2] x [y1, y2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectRegion {
    pub x1: f64,
    pub x2: f64,
    pub y1: f64,
    pub y2: f64,
}

impl RectRegion {
    pub fn new(x1: f64, x2: f64, y1: f64, y2: f64) -> Result<Self> {
        if !(x1 < x2 && y1 < y2) || ![x1, x2, y1, y2].iter().all(|v| v.is_finite()) {
            return Err(Error::Precondition(format!(
                "invalid rectangle [{x1}, {x2}] x [{y1}, {y2}]"
            )));
        }
        Ok(Self { x1, x2, y1, y2 })
    }

    pub fn width(&self) -> f64 {
        self.x2 - self.x1
    }

    pub fn height(&self) -> f64 {
        self.y2 - self.y1
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new(0.5 * (self.x1 + self.x2), 0.5 * (self.y1 + self.y2))
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    /// Strict interior test.
    pub fn contains(&self, z: Complex64) -> bool {
        z.re > self.x1 && z.re < self.x2 && z.im > self.y1 && z.im < self.y2
    }

    /// Distance from an interior or exterior point to the boundary.
    pub fn boundary_distance(&self, z: Complex64) -> f64 {
        let dx = if z.re < self.x1 {
            self.x1 - z.re
        } else if z.re > self.x2 {
            z.re - self.x2
        } else {
            0.0
        };
        let dy = if z.im < self.y1 {
            self.y1 - z.im
        } else if z.im > self.y2 {
            z.im - self.y2
        } else {
            0.0
        };
        if dx > 0.0 || dy > 0.0 {
            return dx.hypot(dy);
        }
        (z.re - self.x1)
            .min(self.x2 - z.re)
            .min(z.im - self.y1)
            .min(self.y2 - z.im)
    }

    /// Rectangle grown by `d` on every side.
    pub fn expanded(&self, d: f64) -> Self {
        Self {
            x1: self.x1 - d,
            x2: self.x2 + d,
            y1: self.y1 - d,
            y2: self.y2 + d,
        }
    }

    /// Corners in counterclockwise order starting from the bottom-right.
    pub fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.x2, self.y1),
            Complex64::new(self.x2, self.y2),
            Complex64::new(self.x1, self.y2),
            Complex64::new(self.x1, self.y1),
        ]
    }

    /// The four sub-rectangles obtained by splitting at the given fractions.
    pub fn quarters(&self, fx: f64, fy: f64) -> [RectRegion; 4] {
        let xm = self.x1 + fx * self.width();
        let ym = self.y1 + fy * self.height();
        [
            Self {
                x2: xm,
                y2: ym,
                ..*self
            },
            Self {
                x1: xm,
                y2: ym,
                ..*self
            },
            Self {
                x2: xm,
                y1: ym,
                ..*self
            },
            Self {
                x1: xm,
                y1: ym,
                ..*self
            },
        ]
    }

    /// Left and right halves split at fraction `f`.
    pub fn split_x(&self, f: f64) -> [RectRegion; 2] {
        let xm = self.x1 + f * self.width();
        [Self { x2: xm, ..*self }, Self { x1: xm, ..*self }]
    }
}

/// `g(z) = (z - center)^{-order}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleSpecG {
    pub center: Complex64,
    pub order: u32,
}

impl PoleSpecG {
    pub fn new(center: Complex64, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::Precondition(
                "g must have a pole of order >= 1".into(),
            ));
        }
        Ok(Self { center, order })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (z - self.center).powi(-(self.order as i32))
    }

    /// `int_a^b g(z) dz` along any path avoiding the center.
    pub fn integral(&self, a: Complex64, b: Complex64) -> Complex64 {
        if self.order == 1 {
            // A straight segment subtends less than pi at the center.
            return ((b - self.center) / (a - self.center)).ln();
        }
        let m = self.order as i32;
        let anti = |z: Complex64| (z - self.center).powi(1 - m) / (1 - m) as f64;
        anti(b) - anti(a)
    }
}

/// An oriented segment or a counterclockwise circle, parametrized on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Path {
    Segment {
        a: Complex64,
        b: Complex64,
    },
    Circle {
        center: Complex64,
        radius: f64,
        phase: f64,
    },
}

impl Path {
    pub fn point(&self, t: f64) -> Complex64 {
        match *self {
            Path::Segment { a, b } => a + (b - a) * t,
            Path::Circle {
                center,
                radius,
                phase,
            } => center + Complex64::from_polar(radius, phase + 2.0 * std::f64::consts::PI * t),
        }
    }

    pub fn tangent(&self, t: f64) -> Complex64 {
        match *self {
            Path::Segment { a, b } => b - a,
            Path::Circle { radius, phase, .. } => {
                let tau = 2.0 * std::f64::consts::PI;
                Complex64::new(0.0, tau) * Complex64::from_polar(radius, phase + tau * t)
            }
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            Path::Segment { a, b } => (b - a).norm(),
            Path::Circle { radius, .. } => 2.0 * std::f64::consts::PI * radius,
        }
    }

    /// Parameter of the point closest to `p`, and the distance to it.
    pub fn closest(&self, p: Complex64) -> (f64, f64) {
        let t = match *self {
            Path::Segment { a, b } => {
                let d = b - a;
                (((p - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0)
            }
            Path::Circle { center, phase, .. } => {
                let tau = 2.0 * std::f64::consts::PI;
                ((p - center).arg() - phase).rem_euclid(tau) / tau
            }
        };
        (t, (self.point(t) - p).norm())
    }

    pub fn reversed(&self) -> Path {
        match *self {
            Path::Segment { a, b } => Path::Segment { a: b, b: a },
            c => c,
        }
    }
}
