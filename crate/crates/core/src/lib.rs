//! Exact arithmetic for hyperbolic polynomials, symmetric pencils and their cones.

pub mod construct;
pub mod error;
pub mod hyperbolic;
pub mod parallel;
pub mod pencil;
pub mod polycone;
pub mod realroot;
pub mod ring;
pub mod scalar;
pub mod vamoslab;

pub use error::{Error, Result};
pub use scalar::{Exact, ExactDiv, Rational, Scalar};

pub type QPoly = ring::Poly<Rational>;
pub type FPoly = ring::Poly<f64>;
pub type QPolyVec = ring::PolyVec<Rational>;
pub type QMatrix = pencil::SymMatrix<Rational>;
pub type QPencil = pencil::SymPencil<Rational>;
