//! Exact and floating-point dense linear algebra for the constraint system.

use num_traits::{Signed, Zero};

use crate::scalar::Rational;

/// Reduced row echelon form of `[C | b]` over the rationals.
#[derive(Debug, Clone)]
pub struct Rref {
    pub ncols: usize,
    /// Nonzero rows; `rows[i][pivots[i]] == 1`.
    pub rows: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
    pub pivots: Vec<usize>,
    /// A row `0 = c` with `c != 0` appeared.
    pub inconsistent: bool,
}

impl Rref {
    /// Gaussian elimination with the pivot of smallest numerator size in each column.
    pub fn new(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>, ncols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].numer().bits() + rows[i][c].denom().bits());
            let Some(p) = best else { continue };
            rows.swap(r, p);
            rhs.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut().skip(c) {
                *x *= &inv;
            }
            rhs[r] *= &inv;
            let (prow, prhs) = (rows[r].clone(), rhs[r].clone());
            let nz: Vec<usize> = (c..ncols).filter(|&k| !prow[k].is_zero()).collect();
            for i in 0..rows.len() {
                if i == r || rows[i][c].is_zero() {
                    continue;
                }
                let f = rows[i][c].clone();
                for &k in &nz {
                    let t = &f * &prow[k];
                    rows[i][k] -= t;
                }
                let t = &f * &prhs;
                rhs[i] -= t;
            }
            pivots.push(c);
            r += 1;
        }
        let inconsistent = rhs[r..].iter().any(|x| !x.is_zero());
        rows.truncate(r);
        rhs.truncate(r);
        Rref {
            ncols,
            rows,
            rhs,
            pivots,
            inconsistent,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// The solution with every free variable zero.
    pub fn particular(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols];
        for (i, &p) in self.pivots.iter().enumerate() {
            x[p] = self.rhs[i].clone();
        }
        x
    }

    /// One basis vector of the homogeneous solution space per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[f] = Rational::from_integer(1.into());
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.rows[i][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Solves the square system `a x = b` exactly; `None` when singular.
pub fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        for i in (c + 1)..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[i][k] -= t;
            }
            let t = &f * &b[c];
            b[i] -= t;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut s = b[i].clone();
        for k in (i + 1)..n {
            s -= &a[i][k] * &x[k];
        }
        x[i] = s / &a[i][i];
    }
    Some(x)
}

pub fn dot_q(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn dot_f(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orthonormal basis of the span of `vectors` (modified Gram-Schmidt, applied twice).
pub fn orthonormalize(vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        let n0 = dot_f(&w, &w).sqrt();
        for _ in 0..2 {
            for q in &out {
                let c = dot_f(&w, q);
                for (x, y) in w.iter_mut().zip(q) {
                    *x -= c * y;
                }
            }
        }
        let n = dot_f(&w, &w).sqrt();
        if n > 1e-10 * n0.max(1.0) {
            out.push(w.into_iter().map(|x| x / n).collect());
        }
    }
    out
}

pub fn max_abs_f(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}
