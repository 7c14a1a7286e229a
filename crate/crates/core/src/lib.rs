//! Gamma-function hierarchy (Euler, q-, complex-field, hyperbolic, elliptic)
//! and a numerical verification harness for beta-integral identities.
//!
//! The numerical core is generic over the real scalar through [`Real`];
//! the identity registry and the degeneration sweeps work in binary64.

pub mod elliptic;
mod error;
pub mod gamma;
pub mod hyperbolic;
pub mod identities;
pub mod limits;
pub mod numerics;
mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

use num_complex::Complex;

pub type C64 = Complex<f64>;
pub type C32 = Complex<f32>;

pub type ModularPair64 = hyperbolic::ModularPair<f64>;
pub type EllipticBase64 = elliptic::EllipticBase<f64>;
pub type FieldGammaArg64 = gamma::FieldGammaArg<f64>;
pub type QuadratureSpec64 = numerics::QuadratureSpec<f64>;
pub type LineContour64 = numerics::LineContour<f64>;
