//! Exact sparse multivariate polynomials.

mod json;
mod monomial;
mod parse;
mod poly;
mod polyvec;

pub use json::{PolyJson, PolyVecJson, TermJson};
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::{Homogeneity, Poly};
pub use polyvec::PolyVec;
