use std::io::Write;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::{dot_f, orthonormalize, Rref};
use super::system::ConstraintSystem;
use crate::error::{Error, Result};
use crate::pencil::numeric::jacobi_eigen;
use crate::pencil::SymMatrix;
use crate::scalar::{Rational, Scalar};

/// The PSD step projects onto `A(e) >= PSD_TARGET I`. Aiming past the accepted
/// bound `A(e) >= I` lets the iterates cross it after finitely many steps instead
/// of approaching it asymptotically.
pub const PSD_TARGET: f64 = 2.0;

/// Knobs for [`solve_feasibility`] and [`super::rationalize`].
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub residual_tol: f64,
    pub max_iter: usize,
    pub denom_bound: u64,
    pub seed: u64,
    /// CSV trace `iter,residual,lambda_min`, one line per iteration.
    pub trace: Option<PathBuf>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            residual_tol: 1e-10,
            max_iter: 100_000,
            denom_bound: 1_000_000,
            seed: 0,
            trace: None,
        }
    }
}

impl SolveOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.residual_tol > 0.0 && self.residual_tol.is_finite()) {
            return Err(Error::InvalidInput("residual_tol must be positive".into()));
        }
        if self.denom_bound == 0 {
            return Err(Error::InvalidInput("denom_bound must be at least 1".into()));
        }
        Ok(())
    }
}

/// Floating-point point of the system with `A(e)` close to `>= I`.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericSolution {
    pub x: Vec<f64>,
    /// `max |C x - b|`.
    pub residual: f64,
    pub lambda_min: f64,
    pub iterations: usize,
}

/// Affine solution set of the system in scaled coordinates `y = s x`, where
/// `s = sqrt 2` on off-diagonal pencil entries so that `|y|` is the Frobenius norm.
pub(crate) struct AffineSet {
    scale: Vec<f64>,
    offset: Vec<f64>,
    basis: Vec<Vec<f64>>,
}

impl AffineSet {
    pub(crate) fn new(sys: &ConstraintSystem) -> Result<Self> {
        let rref = Rref::new(sys.dense(), sys.rhs().to_vec(), sys.num_unknowns());
        if rref.inconsistent {
            return Err(Error::InfeasibleAtTolerance { iterations: 0 });
        }
        let scale: Vec<f64> = (0..sys.num_unknowns())
            .map(|idx| match sys.unknown(idx) {
                Some(super::Unknown::Pencil { i, j, .. }) if i != j => std::f64::consts::SQRT_2,
                _ => 1.0,
            })
            .collect();
        let to_scaled = |v: &[Rational]| -> Vec<f64> { v.iter().zip(&scale).map(|(x, s)| x.to_f64() * s).collect() };
        let basis = orthonormalize(&rref.nullspace().iter().map(|v| to_scaled(v)).collect::<Vec<_>>());
        let mut offset = to_scaled(&rref.particular());
        project_out(&mut offset, &basis);
        Ok(AffineSet {
            scale,
            offset,
            basis,
        })
    }

    fn project(&self, y: &[f64]) -> Vec<f64> {
        let mut out = self.offset.clone();
        for q in &self.basis {
            let c = dot_f(q, y);
            for (o, qi) in out.iter_mut().zip(q) {
                *o += c * qi;
            }
        }
        out
    }
}

fn project_out(v: &mut [f64], basis: &[Vec<f64>]) {
    for q in basis {
        let c = dot_f(v, q);
        for (x, qi) in v.iter_mut().zip(q) {
            *x -= c * qi;
        }
    }
}

/// `A(e)` read off scaled coordinates.
fn pencil_at_e(sys: &ConstraintSystem, y: &[f64], scale: &[f64], e: &[f64]) -> SymMatrix<f64> {
    let m = sys.meta().m;
    SymMatrix::from_upper(m, |i, j| {
        e.iter()
            .enumerate()
            .map(|(k, ek)| {
                let idx = sys.pencil_index(k, i, j);
                ek * y[idx] / scale[idx]
            })
            .sum()
    })
}

/// Euclidean projection onto `{y : A(e) >= t I}`: only the component of the pencil
/// along `e` moves, by `e_k Z / |e|^2` with `Z = proj_{>= t I}(A(e)) - A(e)`.
fn project_shifted_psd(sys: &ConstraintSystem, y: &mut [f64], scale: &[f64], e: &[f64], t: f64) {
    let ae = pencil_at_e(sys, y, scale, e);
    let eig = jacobi_eigen(&ae, 1e-12);
    if eig.values.first().is_none_or(|&l| l >= t) {
        return;
    }
    let z = eig.reconstruct(|l| (t - l).max(0.0));
    let e2 = dot_f(e, e);
    let m = sys.meta().m;
    for (k, ek) in e.iter().enumerate() {
        if *ek == 0.0 {
            continue;
        }
        for i in 0..m {
            for j in i..m {
                let idx = sys.pencil_index(k, i, j);
                y[idx] += scale[idx] * ek * z.get(i, j) / e2;
            }
        }
    }
}

/// Finds `x` with `C x = b` and `A(e) >= I` up to `residual_tol` by Dykstra's
/// alternating projections between the affine solution set and the shifted PSD set
/// `A(e) >= PSD_TARGET I`.
///
/// Deterministic in `(sys, e, opts)`. Failure is reported as
/// [`Error::InfeasibleAtTolerance`], which is not a proof of infeasibility.
pub fn solve_feasibility(sys: &ConstraintSystem, e: &[Rational], opts: &SolveOptions) -> Result<NumericSolution> {
    opts.validate()?;
    let n = sys.meta().n;
    if e.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: e.len() });
    }
    let ef: Vec<f64> = e.iter().map(Scalar::to_f64).collect();
    if dot_f(&ef, &ef) == 0.0 {
        return Err(Error::InvalidInput("direction e is zero".into()));
    }
    let aff = AffineSet::new(sys)?;
    let scale = &aff.scale;
    let unscale = |y: &[f64]| -> Vec<f64> { y.iter().zip(scale).map(|(v, s)| v / s).collect() };

    let mut trace = match &opts.trace {
        Some(path) => {
            let mut w = std::io::BufWriter::new(std::fs::File::create(path).map_err(io_err)?);
            writeln!(w, "iter,residual,lambda_min").map_err(io_err)?;
            Some(w)
        }
        None => None,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let dim = sys.num_unknowns();
    let mut x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut p = vec![0.0; dim];
    let mut q = vec![0.0; dim];
    for iter in 1..=opts.max_iter {
        let xp: Vec<f64> = x.iter().zip(&p).map(|(a, b)| a + b).collect();
        let y = aff.project(&xp);
        p = xp.iter().zip(&y).map(|(a, b)| a - b).collect();

        let lambda_min = jacobi_eigen(&pencil_at_e(sys, &y, scale, &ef), 1e-12)
            .values
            .first()
            .copied()
            .unwrap_or(f64::INFINITY);
        let xs = unscale(&y);
        let residual = sys.residual_f64(&xs);
        if let Some(w) = trace.as_mut() {
            writeln!(w, "{iter},{residual:e},{lambda_min:e}").map_err(io_err)?;
        }
        if residual <= opts.residual_tol && lambda_min >= 1.0 - opts.residual_tol {
            if let Some(w) = trace.as_mut() {
                w.flush().map_err(io_err)?;
            }
            return Ok(NumericSolution {
                x: xs,
                residual,
                lambda_min,
                iterations: iter,
            });
        }

        let mut yq: Vec<f64> = y.iter().zip(&q).map(|(a, b)| a + b).collect();
        let before = yq.clone();
        project_shifted_psd(sys, &mut yq, scale, &ef, PSD_TARGET);
        q = before.iter().zip(&yq).map(|(a, b)| a - b).collect();
        x = yq;
    }
    if let Some(w) = trace.as_mut() {
        w.flush().map_err(io_err)?;
    }
    Err(Error::InfeasibleAtTolerance {
        iterations: opts.max_iter,
    })
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("trace file: {e}"))
}
