use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{dot_q, solve_exact, Rref};
use super::solve::{NumericSolution, SolveOptions};
use super::system::ConstraintSystem;
use crate::error::{Error, RationalizationStage, Result};
use crate::pencil::SymPencil;
use crate::ring::PolyVec;
use crate::scalar::{best_rational, common_denominator, round_to_grid, Rational};

/// Retries after a definiteness failure, each with ten times the denominator bound.
pub const DEFINITENESS_RETRIES: usize = 3;

/// An exact point of the system with `A(e)` positive definite.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSolution {
    pub pencil: SymPencil<Rational>,
    pub g: PolyVec<Rational>,
    pub unknowns: Vec<Rational>,
    /// Denominator bound that succeeded.
    pub denom_bound: u64,
}

impl ExactSolution {
    /// `g = 0`, so `A(x) f` vanishes identically.
    pub fn is_degenerate(&self) -> bool {
        self.g.is_zero()
    }
}

/// Rounds `sol` to small denominators, projects exactly onto the solution set of
/// `sys` and verifies `A(x) f = h g` and `A(e) > 0` exactly.
pub fn rationalize(
    sol: &NumericSolution,
    sys: &ConstraintSystem,
    e: &[Rational],
    opts: &SolveOptions,
) -> Result<ExactSolution> {
    opts.validate()?;
    if sol.x.len() != sys.num_unknowns() {
        return Err(Error::DimensionMismatch {
            expected: sys.num_unknowns(),
            got: sol.x.len(),
        });
    }
    let rref = Rref::new(sys.dense(), sys.rhs().to_vec(), sys.num_unknowns());
    if rref.inconsistent {
        return Err(Error::RationalizationFailed(RationalizationStage::Projection));
    }
    let mut bound = opts.denom_bound;
    for attempt in 0..=DEFINITENESS_RETRIES {
        let rounded = round_all(&sol.x, bound)?;
        let x = project_exact(&rref, rounded)?;
        let pencil = sys.pencil_from(&x)?;
        let g = sys.cofactor_from(&x)?;
        let lhs = pencil.apply(sys.f())?;
        let rhs = g.scale_each(sys.h())?;
        if lhs != rhs {
            return Err(Error::RationalizationFailed(RationalizationStage::Projection));
        }
        if pencil.eval(e)?.is_positive_definite() {
            return Ok(ExactSolution {
                pencil,
                g,
                unknowns: x,
                denom_bound: bound,
            });
        }
        if attempt < DEFINITENESS_RETRIES {
            bound = bound.saturating_mul(10);
        }
    }
    Err(Error::RationalizationFailed(RationalizationStage::Definiteness))
}

/// Continued-fraction rounding of each unknown; when the resulting common
/// denominator exceeds `bound` (which makes the exact projection and anything
/// downstream expensive), every unknown is rounded to the grid `1/bound` instead.
fn round_all(x: &[f64], bound: u64) -> Result<Vec<Rational>> {
    let fail = || Error::RationalizationFailed(RationalizationStage::Rounding);
    let cf = x
        .iter()
        .map(|&v| best_rational(v, bound, 1e-12 * v.abs().max(1.0)).ok_or_else(fail))
        .collect::<Result<Vec<_>>>()?;
    if common_denominator(&cf) <= BigInt::from(bound) {
        return Ok(cf);
    }
    x.iter().map(|&v| round_to_grid(v, bound).ok_or_else(fail)).collect()
}

/// Closest point of `{x : C x = b}` to `x0` in the Euclidean norm, over the rationals.
///
/// With `R` the independent rows of the echelon form, the correction is
/// `R^T (R R^T)^{-1} (b - R x0)`; when the nullspace is smaller the equivalent
/// `x_p + N (N^T N)^{-1} N^T (x0 - x_p)` is used instead.
pub(crate) fn project_exact(rref: &Rref, x0: Vec<Rational>) -> Result<Vec<Rational>> {
    let fail = || Error::RationalizationFailed(RationalizationStage::Projection);
    let defect: Vec<Rational> = rref
        .rows
        .iter()
        .zip(&rref.rhs)
        .map(|(r, b)| b - dot_q(r, &x0))
        .collect();
    if defect.iter().all(Zero::is_zero) {
        return Ok(x0);
    }
    let gram = |vs: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        vs.iter().map(|a| vs.iter().map(|b| dot_q(a, b)).collect()).collect()
    };
    let combine = |vs: &[Vec<Rational>], c: &[Rational], base: Vec<Rational>| -> Vec<Rational> {
        let mut out = base;
        for (v, ci) in vs.iter().zip(c) {
            if ci.is_zero() {
                continue;
            }
            for (o, vi) in out.iter_mut().zip(v) {
                if !vi.is_zero() {
                    *o += ci * vi;
                }
            }
        }
        out
    };
    let null = rref.nullspace();
    if rref.rank() <= null.len() {
        let c = solve_exact(gram(&rref.rows), defect).ok_or_else(fail)?;
        Ok(combine(&rref.rows, &c, x0))
    } else {
        let xp = rref.particular();
        let diff: Vec<Rational> = x0.iter().zip(&xp).map(|(a, b)| a - b).collect();
        let rhs: Vec<Rational> = null.iter().map(|v| dot_q(v, &diff)).collect();
        let c = solve_exact(gram(&null), rhs).ok_or_else(fail)?;
        Ok(combine(&null, &c, xp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn projection_is_orthogonal() {
        // x + y + z = 3
        let rref = Rref::new(vec![vec![int(1), int(1), int(1)]], vec![int(3)], 3);
        let x = project_exact(&rref, vec![int(0), int(0), int(0)]).unwrap();
        assert_eq!(x, vec![int(1), int(1), int(1)]);
        let on = vec![int(3), int(0), int(0)];
        assert_eq!(project_exact(&rref, on.clone()).unwrap(), on);
        // two equations, one free direction: both branches must agree
        let rref = Rref::new(
            vec![vec![int(1), int(0), int(1)], vec![int(0), int(1), int(-1)]],
            vec![int(1), int(2)],
            3,
        );
        let x = project_exact(&rref, vec![int(5), int(-1), int(7)]).unwrap();
        for (r, b) in rref.rows.iter().zip(&rref.rhs) {
            assert_eq!(&dot_q(r, &x), b);
        }
        let d: Vec<Rational> = [int(5), int(-1), int(7)].iter().zip(&x).map(|(a, b)| a - b).collect();
        for n in rref.nullspace() {
            assert!(dot_q(&n, &d).is_zero());
        }
    }
}
