use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Exact, Rational, Scalar};

/// Dense symmetric matrix, stored row-major in full.
#[derive(Clone, PartialEq)]
pub struct SymMatrix<T: Scalar> {
    m: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    /// Builds from rows, rejecting ragged or asymmetric input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        let mut data = Vec::with_capacity(m * m);
        for r in rows {
            if r.len() != m {
                return Err(Error::Shape(format!("expected {m} columns, got {}", r.len())));
            }
            data.extend(r);
        }
        let out = SymMatrix { m, data };
        for i in 0..m {
            for j in (i + 1)..m {
                if out.get(i, j) != out.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Fills the upper triangle from `f(i, j)` with `i <= j` and mirrors it.
    pub fn from_upper(m: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = vec![T::zero(); m * m];
        for i in 0..m {
            for j in i..m {
                let v = f(i, j);
                data[j * m + i] = v.clone();
                data[i * m + j] = v;
            }
        }
        SymMatrix { m, data }
    }

    pub fn zeros(m: usize) -> Self {
        SymMatrix {
            m,
            data: vec![T::zero(); m * m],
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::from_diag(&vec![T::one(); m])
    }

    pub fn from_diag(d: &[T]) -> Self {
        Self::from_upper(d.len(), |i, j| if i == j { d[i].clone() } else { T::zero() })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.m + j]
    }

    /// Sets entries `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[j * self.m + i] = v.clone();
        self.data[i * self.m + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.m.max(1)).take(self.m).map(<[T]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(SymMatrix {
            m: self.m,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        SymMatrix {
            m: self.m,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                got: v.len(),
            });
        }
        Ok((0..self.m)
            .map(|i| {
                (0..self.m).fold(T::zero(), |acc, j| acc + self.get(i, j).clone() * v[j].clone())
            })
            .collect())
    }

    /// `v^T M v`.
    pub fn quadratic_form(&self, v: &[T]) -> Result<T> {
        let mv = self.mul_vec(v)?;
        Ok(mv.into_iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a * b.clone()))
    }

    pub fn trace(&self) -> T {
        (0..self.m).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix {
            m: self.m,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> SymMatrix<f64> {
        self.map(Scalar::to_f64)
    }

    pub(crate) fn check_size(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                got: other.m,
            });
        }
        Ok(())
    }
}

/// Result of symmetric elimination with diagonal pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Semidefinite with the given rank.
    PositiveSemidefinite(usize),
    Indefinite,
}

/// `M = L D L^T` with unit lower triangular `L` and positive diagonal `D`.
#[derive(Debug, Clone)]
pub struct Ldl<T: Scalar> {
    /// `l[i][j]` for `j < i`.
    pub l: Vec<Vec<T>>,
    pub d: Vec<T>,
}

impl<T: Exact> SymMatrix<T> {
    /// Exact classification by symmetric Gaussian elimination.
    ///
    /// A zero pivot is accepted only when the rest of its row in the current
    /// Schur complement is zero too.
    pub fn definiteness(&self) -> Definiteness {
        let m = self.m;
        let mut a = self.data.clone();
        let mut rank = 0;
        for k in 0..m {
            let p = a[k * m + k].clone();
            if p.is_negative() {
                return Definiteness::Indefinite;
            }
            if p.is_zero() {
                if (k + 1..m).any(|j| !a[k * m + j].is_zero()) {
                    return Definiteness::Indefinite;
                }
                continue;
            }
            rank += 1;
            for i in (k + 1)..m {
                let f = a[i * m + k].clone() / p.clone();
                if f.is_zero() {
                    continue;
                }
                for j in (k + 1)..m {
                    let akj = a[k * m + j].clone();
                    if !akj.is_zero() {
                        a[i * m + j] = a[i * m + j].clone() - f.clone() * akj;
                    }
                }
            }
        }
        if rank == m {
            Definiteness::PositiveDefinite
        } else {
            Definiteness::PositiveSemidefinite(rank)
        }
    }

    pub fn is_positive_definite(&self) -> bool {
        self.definiteness() == Definiteness::PositiveDefinite
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.definiteness() != Definiteness::Indefinite
    }

    /// `L D L^T` factorization; fails unless the matrix is positive definite.
    pub fn ldl(&self) -> Result<Ldl<T>> {
        let m = self.m;
        let mut l = vec![vec![T::zero(); m]; m];
        let mut d: Vec<T> = Vec::with_capacity(m);
        for j in 0..m {
            let mut dj = self.get(j, j).clone();
            for k in 0..j {
                dj = dj - l[j][k].clone() * l[j][k].clone() * d[k].clone();
            }
            if !dj.is_positive() {
                return Err(Error::NotPositiveDefinite);
            }
            for i in (j + 1)..m {
                let mut s = self.get(i, j).clone();
                for k in 0..j {
                    s = s - l[i][k].clone() * l[j][k].clone() * d[k].clone();
                }
                l[i][j] = s / dj.clone();
            }
            d.push(dj);
        }
        for (i, row) in l.iter_mut().enumerate() {
            row.truncate(i);
        }
        Ok(Ldl { l, d })
    }
}

impl<T: Scalar> fmt::Debug for SymMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl SymMatrix<Rational> {
    /// Positive definiteness by Sylvester's criterion, with the leading principal
    /// minors of an integer multiple computed by fraction-free elimination.
    pub fn leading_minors_positive(&self) -> bool {
        use num_bigint::BigInt;
        use num_traits::{One, Signed};
        let m = self.m;
        let den = crate::scalar::common_denominator(&self.data);
        let mut a: Vec<BigInt> = self
            .data
            .iter()
            .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut prev = BigInt::one();
        for k in 0..m {
            let p = a[k * m + k].clone();
            if !p.is_positive() {
                return false;
            }
            for i in (k + 1)..m {
                for j in (k + 1)..=i {
                    let v = (&p * &a[i * m + j] - &a[i * m + k] * &a[k * m + j]) / &prev;
                    a[i * m + j] = v.clone();
                    a[j * m + i] = v;
                }
            }
            prev = p;
        }
        true
    }

    /// [`Self::is_positive_semidefinite`] with a fast path for definite input.
    pub fn is_psd_exact(&self) -> bool {
        self.leading_minors_positive() || self.is_positive_semidefinite()
    }
}

impl fmt::Display for SymMatrix<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
