//! Symmetric linear pencils `A(x) = x1 A1 + ... + xn An`.

mod bareiss;
mod json;
mod matrix;
pub mod numeric;

pub use bareiss::{bareiss_det, Domain};
pub use json::PencilJson;
pub use matrix::{Definiteness, Ldl, SymMatrix};

use crate::error::{Error, Result};
use crate::realroot::{count_real_roots, Bound, Interval};
use crate::ring::{Poly, PolyVec};
use crate::scalar::{Exact, Rational, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct SymPencil<T: Scalar> {
    matrices: Vec<SymMatrix<T>>,
}

impl<T: Scalar> SymPencil<T> {
    pub fn new(matrices: Vec<SymMatrix<T>>) -> Result<Self> {
        let Some(first) = matrices.first() else {
            return Err(Error::Shape("a pencil needs at least one matrix".into()));
        };
        let m = first.size();
        for a in &matrices {
            first.check_size(a)?;
        }
        if m == 0 {
            return Err(Error::Shape("matrices must be at least 1x1".into()));
        }
        Ok(SymPencil { matrices })
    }

    pub fn zeros(n: usize, m: usize) -> Self {
        SymPencil {
            matrices: vec![SymMatrix::zeros(m); n],
        }
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.matrices.len()
    }

    /// Matrix size.
    pub fn size(&self) -> usize {
        self.matrices[0].size()
    }

    pub fn matrices(&self) -> &[SymMatrix<T>] {
        &self.matrices
    }

    pub fn matrix(&self, k: usize) -> &SymMatrix<T> {
        &self.matrices[k]
    }

    pub fn matrix_mut(&mut self, k: usize) -> &mut SymMatrix<T> {
        &mut self.matrices[k]
    }

    /// `A(v)`.
    pub fn eval(&self, v: &[T]) -> Result<SymMatrix<T>> {
        if v.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: v.len(),
            });
        }
        let m = self.size();
        Ok(SymMatrix::from_upper(m, |i, j| {
            self.matrices
                .iter()
                .zip(v)
                .fold(T::zero(), |acc, (a, vk)| acc + a.get(i, j).clone() * vk.clone())
        }))
    }

    /// The linear form `sum_k A_k[i][j] x_k`.
    pub fn entry(&self, i: usize, j: usize) -> Poly<T> {
        let n = self.nvars();
        let mut p = Poly::zero(n);
        for (k, a) in self.matrices.iter().enumerate() {
            p = &p + &Poly::var(n, k).scale(a.get(i, j));
        }
        p
    }

    /// Entries of `A(x)` as linear forms.
    pub fn entry_matrix(&self) -> Vec<Vec<Poly<T>>> {
        let m = self.size();
        (0..m).map(|i| (0..m).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// `A(x) f`.
    pub fn apply(&self, f: &PolyVec<T>) -> Result<PolyVec<T>> {
        let m = self.size();
        if f.len() != m {
            return Err(Error::Shape(format!("vector of length {} for a {m}x{m} pencil", f.len())));
        }
        if f.nvars() != self.nvars() {
            return Err(Error::NvarsMismatch(self.nvars(), f.nvars()));
        }
        let n = self.nvars();
        // x_k f_j, computed once
        let shifted: Vec<Vec<Poly<T>>> = f
            .entries()
            .iter()
            .map(|fj| (0..n).map(|k| &Poly::var(n, k) * fj).collect())
            .collect();
        let entries = (0..m)
            .map(|i| {
                let mut acc = Poly::zero(n);
                for (j, xf) in shifted.iter().enumerate() {
                    for (k, a) in self.matrices.iter().enumerate() {
                        let c = a.get(i, j);
                        if !c.is_zero() {
                            acc = &acc + &xf[k].scale(c);
                        }
                    }
                }
                acc
            })
            .collect();
        PolyVec::new(entries)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> SymPencil<U> {
        SymPencil {
            matrices: self.matrices.iter().map(|a| a.map(f)).collect(),
        }
    }

    pub fn to_f64(&self) -> SymPencil<f64> {
        self.map(Scalar::to_f64)
    }
}

impl<T: Exact> SymPencil<T> {
    /// `det A(x)`, homogeneous of degree `m`.
    pub fn det(&self) -> Result<Poly<T>> {
        let one = Poly::constant(self.nvars(), T::one());
        let rows: Vec<Vec<T>> = self.matrices.iter().flat_map(|a| a.rows()).collect();
        let c = T::clearing_factor(rows.iter().flatten());
        if c.is_one() {
            return bareiss_det(self.entry_matrix(), one);
        }
        // det(cA) = c^m det(A); fraction-free elimination is much cheaper on integers
        let scaled = self.map(|x| x.clone() * c.clone());
        let d = bareiss_det(scaled.entry_matrix(), one)?;
        let mut cm = T::one();
        for _ in 0..self.size() {
            cm = cm * c.clone();
        }
        Ok(d.scale(&(T::one() / cm)))
    }

    /// Row `i` of `adj A(x)`; satisfies `A(x) r = det A(x) e_i`.
    pub fn adjugate_row(&self, i: usize) -> Result<PolyVec<T>> {
        let m = self.size();
        if i >= m {
            return Err(Error::IndexOutOfRange { index: i, size: m });
        }
        let n = self.nvars();
        let full = self.entry_matrix();
        let one = Poly::constant(n, T::one());
        let entries = (0..m)
            .map(|j| {
                // adj[i][j] = (-1)^(i+j) det(A without row j and column i)
                let minor: Vec<Vec<Poly<T>>> = full
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| *r != j)
                    .map(|(_, row)| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != i)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let d = bareiss_det(minor, one.clone())?;
                Ok(if (i + j) % 2 == 1 { -d } else { d })
            })
            .collect::<Result<Vec<_>>>()?;
        PolyVec::new(entries)
    }
}

impl<T: Exact + Domain> SymMatrix<T> {
    /// Exact scalar determinant.
    pub fn det(&self) -> Result<T> {
        bareiss_det(self.rows(), T::one())
    }
}

impl SymMatrix<Rational> {
    /// `det(t I - M)` as a polynomial in one variable.
    pub fn charpoly(&self) -> Result<crate::realroot::UniPoly> {
        let m = self.size();
        let t = Poly::<Rational>::var(1, 0);
        let entries: Vec<Vec<Poly<Rational>>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let c = Poly::constant(1, -self.get(i, j).clone());
                        if i == j {
                            &t + &c
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        let d = bareiss_det(entries, Poly::constant(1, Rational::from_i64(1)))?;
        d.restrict_to_line(&[Rational::from_i64(1)], &[Rational::from_i64(0)])
    }

    /// `lambda_min(M) > tau`, decided by an exact Sturm count on the characteristic polynomial.
    pub fn eigen_lower_bound(&self, tau: &Rational) -> Result<bool> {
        if self.size() == 0 {
            return Ok(true);
        }
        let cp = self.charpoly()?;
        let iv = Interval {
            lo: Bound::NegInf,
            hi: Bound::Closed(tau.clone()),
        };
        Ok(count_real_roots(&cp, &iv)? == 0)
    }
}

pub fn pencil_eval<T: Scalar>(p: &SymPencil<T>, v: &[T]) -> Result<SymMatrix<T>> {
    p.eval(v)
}

pub fn pencil_apply<T: Scalar>(p: &SymPencil<T>, f: &PolyVec<T>) -> Result<PolyVec<T>> {
    p.apply(f)
}

pub fn pencil_det<T: Exact>(p: &SymPencil<T>) -> Result<Poly<T>> {
    p.det()
}

pub fn adjugate_row<T: Exact>(p: &SymPencil<T>, i: usize) -> Result<PolyVec<T>> {
    p.adjugate_row(i)
}

pub fn is_positive_definite<T: Exact>(m: &SymMatrix<T>) -> bool {
    m.is_positive_definite()
}

pub fn eigen_lower_bound(m: &SymMatrix<Rational>, tau: &Rational) -> Result<bool> {
    m.eigen_lower_bound(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use crate::scalar::{int, ratio};

    fn mat(rows: &[&[i64]]) -> SymMatrix<Rational> {
        SymMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    /// `[[x1+x2, x3], [x3, x1-x2]]`
    fn quadric() -> SymPencil<Rational> {
        SymPencil::new(vec![
            mat(&[&[1, 0], &[0, 1]]),
            mat(&[&[1, 0], &[0, -1]]),
            mat(&[&[0, 1], &[1, 0]]),
        ])
        .unwrap()
    }

    fn p3(s: &str) -> Poly<Rational> {
        parse_poly(s, 3).unwrap()
    }

    #[test]
    fn evaluation() {
        let q = quadric();
        assert_eq!(q.eval(&[int(1), int(0), int(0)]).unwrap(), SymMatrix::identity(2));
        assert!(q.eval(&[int(0), int(0), int(0)]).unwrap().is_zero());
        assert!(q.eval(&[int(1)]).is_err());
    }

    #[test]
    fn apply_and_det() {
        let q = quadric();
        let f = PolyVec::new(vec![p3("x1 - x2"), p3("-x3")]).unwrap();
        let out = q.apply(&f).unwrap();
        assert_eq!(out.get(0), &p3("x1^2 - x2^2 - x3^2"));
        assert!(out.get(1).is_zero());
        assert_eq!(q.det().unwrap(), p3("x1^2 - x2^2 - x3^2"));
        let diag = SymPencil::new(vec![SymMatrix::<Rational>::identity(4)]).unwrap();
        assert_eq!(diag.det().unwrap(), parse_poly("x1^4", 1).unwrap());
    }

    #[test]
    fn adjugate_rows() {
        let q = quadric();
        let r = q.adjugate_row(0).unwrap();
        assert_eq!(r.entries(), &[p3("x1 - x2"), p3("-x3")]);
        assert!(q.adjugate_row(2).is_err());
        let id = SymPencil::new(vec![SymMatrix::<Rational>::identity(3)]).unwrap();
        let r = id.adjugate_row(1).unwrap();
        let x = |s: &str| parse_poly(s, 1).unwrap();
        assert_eq!(r.entries(), &[x("0"), x("x1^2"), x("0")]);
    }

    #[test]
    fn eigenvalue_bounds() {
        assert!(SymMatrix::<Rational>::identity(3).eigen_lower_bound(&ratio(1, 2)).unwrap());
        let d = mat(&[&[1, 0], &[0, 2]]);
        assert!(!d.eigen_lower_bound(&int(3)).unwrap());
        assert!(!d.eigen_lower_bound(&int(1)).unwrap());
        assert!(d.eigen_lower_bound(&ratio(99, 100)).unwrap());
        assert_eq!(
            mat(&[&[2, 1], &[1, 2]]).charpoly().unwrap(),
            crate::realroot::UniPoly::from_ints(&[3, -4, 1])
        );
        assert_eq!(mat(&[&[2, 1], &[1, 2]]).det().unwrap(), int(3));
    }
}
