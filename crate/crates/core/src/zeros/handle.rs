use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

type ComplexFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// Whether a record is a zero or a pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecordKind {
    Zero,
    Pole,
}

/// A zero or pole with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroPoleRecord {
    pub location: Complex64,
    pub multiplicity: u32,
    pub kind: RecordKind,
}

impl ZeroPoleRecord {
    pub fn zero(location: Complex64, multiplicity: u32) -> Self {
        Self {
            location,
            multiplicity,
            kind: RecordKind::Zero,
        }
    }

    pub fn pole(location: Complex64, multiplicity: u32) -> Self {
        Self {
            location,
            multiplicity,
            kind: RecordKind::Pole,
        }
    }
}

/// A meromorphic function as an executable object.
#[derive(Clone)]
pub struct FunctionHandle {
    pub name: String,
    eval: ComplexFn,
    log_deriv: Option<ComplexFn>,
    pub known_poles: Vec<ZeroPoleRecord>,
}

impl fmt::Debug for FunctionHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionHandle")
            .field("name", &self.name)
            .field("log_deriv", &self.log_deriv.is_some())
            .field("known_poles", &self.known_poles.len())
            .finish()
    }
}

impl FunctionHandle {
    pub fn new<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
            log_deriv: None,
            known_poles: Vec::new(),
        }
    }

    pub fn with_log_deriv<F>(mut self, d: F) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        self.log_deriv = Some(Arc::new(d));
        self
    }

    pub fn with_poles(mut self, poles: Vec<ZeroPoleRecord>) -> Self {
        self.known_poles = poles;
        self
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.eval)(z)
    }

    pub fn has_log_deriv(&self) -> bool {
        self.log_deriv.is_some()
    }

    /// `f'/f`, analytic when supplied, otherwise a five-point stencil.
    pub fn log_deriv(&self, z: Complex64) -> Complex64 {
        match &self.log_deriv {
            Some(d) => d(z),
            None => self.derivative(z) / self.eval(z),
        }
    }

    /// `f'` from the supplied log-derivative or a five-point stencil with
    /// step `1e-5 (1 + |z|)`, shortened to a twentieth of the distance to the
    /// nearest known pole.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        if let Some(d) = &self.log_deriv {
            return d(z) * self.eval(z);
        }
        let pole = self
            .known_poles
            .iter()
            .map(|p| (p.location - z).norm())
            .fold(f64::INFINITY, f64::min);
        let h = (1e-5 * (1.0 + z.norm())).min(0.05 * pole);
        let f = |d: f64| self.eval(z + d);
        (f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h)
    }

    /// Poles lying strictly inside the given predicate region.
    pub fn poles_where(&self, inside: impl Fn(Complex64) -> bool) -> Vec<ZeroPoleRecord> {
        self.known_poles
            .iter()
            .copied()
            .filter(|p| inside(p.location))
            .collect()
    }
}
