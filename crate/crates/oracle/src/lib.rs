//! Independent reference implementations for the littlewood test suites.
//!
//! Everything here is deliberately slow and simple: fixed-node quadrature,
//! brute-force sums, Stirling series, dense eigenvalues.

pub mod quad;
pub mod roots;
pub mod special;
pub mod sums;
pub mod zeta;

pub use num_complex::Complex64;
