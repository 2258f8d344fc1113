use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::Monomial;
use crate::error::{Error, Result};
use crate::realroot::UniPoly;
use crate::scalar::{Exact, ExactDiv, Rational, Scalar};

/// Outcome of a homogeneity query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(u32),
    NotHomogeneous,
}

/// Sparse multivariate polynomial with coefficients in `T`.
///
/// Terms are kept in a map keyed by exponent vector in graded reverse
/// lexicographic order; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Poly<T: Scalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    /// The variable `x_{i+1}` (indices are zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(T::one(), Monomial::var(nvars, i))
    }

    pub fn term(c: T, m: Monomial) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (T, Vec<u32>)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::NvarsMismatch(nvars, e.len()));
            }
            p.add_term(Monomial::new(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) if degs.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::NotHomogeneous,
        }
    }

    /// True when homogeneous of degree `d`; the zero polynomial qualifies for every `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        matches!(self.homogeneity(), Homogeneity::Zero)
            || self.homogeneity() == Homogeneity::Degree(d)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &T, m: &Monomial) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, T::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the zero-based variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if let Some(lower) = m.lower(i) {
                out.add_term(lower, c.clone() * T::from_i64(e as i64));
            }
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Directional derivative `sum_i a_i dp/dx_i`.
    pub fn directional_derivative(&self, a: &[T]) -> Result<Self> {
        self.check_point(a)?;
        let mut out = Self::zero(self.nvars);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            out = &out + &self.partial_derivative(i)?.scale(ai);
        }
        Ok(out)
    }

    fn check_point(&self, v: &[T]) -> Result<()> {
        if v.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, v: &[T]) -> Result<T> {
        self.check_point(v)?;
        let mut powers: Vec<Vec<T>> = vec![vec![T::one()]; self.nvars];
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().expect("nonempty").clone() * v[i].clone();
                    powers[i].push(next);
                }
                t = t * powers[i][e].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Coefficients (ascending powers of `t`) of `p(t e + v)`.
    pub fn line_coefficients(&self, e: &[T], v: &[T]) -> Result<Vec<T>> {
        self.check_point(e)?;
        self.check_point(v)?;
        let deg = self.total_degree().unwrap_or(0) as usize;
        // powers[i][k] = (t e_i + v_i)^k as ascending coefficient vectors
        let mut powers: Vec<Vec<Vec<T>>> = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let lin = vec![v[i].clone(), e[i].clone()];
            let mut pw = vec![vec![T::one()]];
            for _ in 0..deg {
                let next = uni_mul(pw.last().expect("nonempty"), &lin);
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out = vec![T::zero(); deg + 1];
        for (m, c) in &self.terms {
            let mut acc = vec![c.clone()];
            for (i, &k) in m.exps().iter().enumerate() {
                if k > 0 {
                    acc = uni_mul(&acc, &powers[i][k as usize]);
                }
            }
            for (j, a) in acc.into_iter().enumerate() {
                out[j] = out[j].clone() + a;
            }
        }
        while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        Ok(out)
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

fn uni_mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

impl<T: Exact> Poly<T> {
    /// Exact quotient `self / divisor` by single-divisor reduction under the term order.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_nvars(divisor)?;
        let (lm, lc) = match divisor.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZeroPoly),
        };
        let mut rem = self.terms.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.iter().next_back() {
            if !lm.divides(m) {
                return Err(Error::NotDivisible);
            }
            let qm = lm.quotient_of(m);
            let qc = c.clone() / lc.clone();
            for (dm, dc) in &divisor.terms {
                let key = dm.mul(&qm);
                let delta = dc.clone() * qc.clone();
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().clone() - delta;
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_divide(self).is_ok()
    }
}

impl Poly<Rational> {
    /// `p(t e + v)` as a univariate polynomial in `t`.
    pub fn restrict_to_line(&self, e: &[Rational], v: &[Rational]) -> Result<UniPoly> {
        Ok(UniPoly::new(self.line_coefficients(e, v)?))
    }

    pub fn to_f64(&self) -> Poly<f64> {
        self.map_coeffs(|c| c.to_f64())
    }
}

impl<T: Exact> ExactDiv for Poly<T> {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.exact_divide(divisor)
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if *c < T::zero() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let is_const = m.degree() == 0;
            if mag.is_one() && !is_const {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<T: Scalar> $tr<&Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                self.$checked(rhs).expect("polynomial variable counts must agree")
            }
        }
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}
