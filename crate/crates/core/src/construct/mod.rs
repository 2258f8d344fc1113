//! Determinantal representations from a guessed vector `f`: the linear system
//! `A(x) f = h g`, a numeric feasibility solve with `A(e) >= I`, exact rounding,
//! and the identities a solution must satisfy.

mod exact;
mod identities;
pub mod linalg;
mod solve;
mod system;

pub use exact::{rationalize, ExactSolution, DEFINITENESS_RETRIES};
pub use identities::{check_mixed_identity, derived_p, quadratic_form, sos_witness_check, SosCertificate};
pub use solve::{solve_feasibility, NumericSolution, SolveOptions};
pub use system::{assemble_constraints, ConstraintSystem, Equation, Meta, Unknown};
