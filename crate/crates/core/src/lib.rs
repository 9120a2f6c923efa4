//! Executable verification of the generalized Littlewood contour theorem and
//! the sum, product and zero-sum identities derived from it.

pub mod contour;
pub mod error;
pub mod numerics;
pub mod products;
pub mod quad;
pub mod report;
pub mod series;
pub mod sum;
pub mod zeros;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Double-precision complex number used throughout the crate.
pub type ComplexValue = Complex64;
