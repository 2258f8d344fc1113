use super::{Homogeneity, Poly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Nonempty vector of polynomials over a common set of variables.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyVec<T: Scalar> {
    nvars: usize,
    entries: Vec<Poly<T>>,
}

impl<T: Scalar> PolyVec<T> {
    pub fn new(entries: Vec<Poly<T>>) -> Result<Self> {
        let nvars = entries
            .first()
            .ok_or_else(|| Error::InvalidInput("polynomial vector must be nonempty".into()))?
            .nvars();
        if let Some(bad) = entries.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::NvarsMismatch(nvars, bad.nvars()));
        }
        Ok(PolyVec { nvars, entries })
    }

    pub fn zeros(nvars: usize, len: usize) -> Self {
        PolyVec {
            nvars,
            entries: vec![Poly::zero(nvars); len.max(1)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Poly<T>] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Poly<T> {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<Poly<T>> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Common degree of the nonzero entries; `None` if they disagree or any entry is inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<Homogeneity> {
        let mut deg = Homogeneity::Zero;
        for p in &self.entries {
            match (p.homogeneity(), deg) {
                (Homogeneity::NotHomogeneous, _) => return None,
                (Homogeneity::Zero, _) => {}
                (Homogeneity::Degree(d), Homogeneity::Zero) => deg = Homogeneity::Degree(d),
                (Homogeneity::Degree(d), Homogeneity::Degree(e)) if d == e => {}
                _ => return None,
            }
        }
        Some(deg)
    }

    /// `sum_i c_i * entries[i]`.
    pub fn dot_scalars(&self, c: &[T]) -> Result<Poly<T>> {
        if c.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: c.len(),
            });
        }
        let mut acc = Poly::zero(self.nvars);
        for (p, ci) in self.entries.iter().zip(c) {
            if !ci.is_zero() {
                acc = &acc + &p.scale(ci);
            }
        }
        Ok(acc)
    }

    /// `sum_i a_i * b_i` for polynomial vectors.
    pub fn dot(&self, other: &PolyVec<T>) -> Result<Poly<T>> {
        if other.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let mut acc = Poly::zero(self.nvars);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc.checked_add(&a.checked_mul(b)?)?;
        }
        Ok(acc)
    }

    pub fn scale_each(&self, p: &Poly<T>) -> Result<PolyVec<T>> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.checked_mul(p))
            .collect::<Result<Vec<_>>>()?;
        PolyVec::new(entries)
    }
}
