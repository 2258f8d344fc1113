//! Floating-point symmetric eigensolver and Cholesky factorization.

use super::SymMatrix;
use crate::error::{Error, Result};

/// Eigenpairs of a symmetric matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

impl Eigen {
    /// `sum_k f(lambda_k) v_k v_k^T`.
    pub fn reconstruct(&self, f: impl Fn(f64) -> f64) -> SymMatrix<f64> {
        let m = self.values.len();
        let mut out = SymMatrix::zeros(m);
        for (lam, v) in self.values.iter().zip(&self.vectors) {
            let w = f(*lam);
            if w == 0.0 {
                continue;
            }
            for i in 0..m {
                for j in i..m {
                    let x = out.get(i, j) + w * v[i] * v[j];
                    out.set(i, j, x);
                }
            }
        }
        out
    }
}

/// Cyclic Jacobi with threshold `tol` on the off-diagonal Frobenius norm, relative to the full norm.
pub fn jacobi_eigen(a: &SymMatrix<f64>, tol: f64) -> Eigen {
    let m = a.size();
    let mut s: Vec<Vec<f64>> = a.rows();
    let mut v: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let norm: f64 = s.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    for _sweep in 0..100 {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| s[i][j] * s[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= tol * norm.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = s[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (s[q][q] - s[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..m {
                    let skp = s[k][p];
                    let skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for k in 0..m {
                    let spk = s[p][k];
                    let sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - sn * vq;
                    row[q] = sn * vp + c * vq;
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by(|&i, &j| s[i][i].total_cmp(&s[j][j]));
    Eigen {
        values: idx.iter().map(|&i| s[i][i]).collect(),
        vectors: idx.iter().map(|&i| v.iter().map(|r| r[i]).collect()).collect(),
    }
}

pub fn min_eigenvalue(a: &SymMatrix<f64>) -> f64 {
    jacobi_eigen(a, 1e-12).values.first().copied().unwrap_or(f64::INFINITY)
}

/// Lower triangular `L` with `A = L L^T`.
pub fn cholesky(a: &SymMatrix<f64>) -> Result<Vec<Vec<f64>>> {
    let m = a.size();
    let mut l = vec![vec![0.0; m]; m];
    for j in 0..m {
        let d = a.get(j, j) - (0..j).map(|k| l[j][k] * l[j][k]).sum::<f64>();
        if d <= 0.0 || !d.is_finite() {
            return Err(Error::NotPositiveDefinite);
        }
        l[j][j] = d.sqrt();
        for i in (j + 1)..m {
            let s = a.get(i, j) - (0..j).map(|k| l[i][k] * l[j][k]).sum::<f64>();
            l[i][j] = s / l[j][j];
        }
    }
    Ok(l)
}

/// Eigenvalues of `B` relative to positive definite `A` (roots of `det(B - t A)`), ascending.
pub fn generalized_eigenvalues(a: &SymMatrix<f64>, b: &SymMatrix<f64>) -> Result<Vec<f64>> {
    let l = cholesky(a)?;
    let m = a.size();
    // C = L^{-1} B L^{-T}
    let mut y = b.rows();
    for col in 0..m {
        forward_solve(&l, &mut y, col);
    }
    let mut yt: Vec<Vec<f64>> = (0..m).map(|i| (0..m).map(|j| y[j][i]).collect()).collect();
    for col in 0..m {
        forward_solve(&l, &mut yt, col);
    }
    let c = SymMatrix::from_upper(m, |i, j| 0.5 * (yt[i][j] + yt[j][i]));
    Ok(jacobi_eigen(&c, 1e-12).values)
}

// solve L x = y[.][col] in place
fn forward_solve(l: &[Vec<f64>], y: &mut [Vec<f64>], col: usize) {
    for i in 0..l.len() {
        let s: f64 = (0..i).map(|k| l[i][k] * y[k][col]).sum();
        y[i][col] = (y[i][col] - s) / l[i][i];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_on_small_matrix() {
        let a = SymMatrix::from_rows(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let e = jacobi_eigen(&a, 1e-14);
        assert!((e.values[0] - 1.0).abs() < 1e-12);
        assert!((e.values[1] - 3.0).abs() < 1e-12);
        let back = e.reconstruct(|x| x);
        for i in 0..2 {
            for j in 0..2 {
                assert!((back.get(i, j) - a.get(i, j)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn generalized_spectrum() {
        let a = SymMatrix::from_diag(&[4.0, 1.0]);
        let b = SymMatrix::from_diag(&[2.0, -3.0]);
        let ev = generalized_eigenvalues(&a, &b).unwrap();
        assert!((ev[0] + 3.0).abs() < 1e-12 && (ev[1] - 0.5).abs() < 1e-12);
        assert!(cholesky(&SymMatrix::from_diag(&[1.0, -1.0])).is_err());
    }
}
