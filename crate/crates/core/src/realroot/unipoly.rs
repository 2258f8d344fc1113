use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Rational};

/// Univariate polynomial over the rationals, coefficients in ascending powers.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `prod (t - r_i)`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut acc = Self::one();
        for r in roots {
            acc = acc.mul(&UniPoly::new(vec![-r.clone(), Rational::one()]));
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().expect("nonempty").clone() / &lc;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Scales by a positive rational so that coefficients are coprime integers.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Self::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &content))
                .collect(),
        )
    }

    /// Integer coefficients of a positive multiple of `self`.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.primitive()
            .coeffs
            .into_iter()
            .map(|c| c.to_integer())
            .collect()
    }

    /// `self / gcd(self, self')`, monic. Errors on zero input.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g).0.monic())
    }

    /// Yun's square-free factorization: `self = c * prod_k s_k^k`, returned as `(s_k, k)` with
    /// nonconstant monic `s_k`.
    pub fn squarefree_factors(&self) -> Result<Vec<(UniPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            k += 1;
        }
        Ok(out)
    }

    /// `p(t) -> p(t + s)`.
    pub fn shift(&self, s: &Rational) -> Self {
        let mut acc = Self::zero();
        let lin = UniPoly::new(vec![s.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&UniPoly::new(vec![c.clone()]));
        }
        acc
    }

    /// Power-of-two bound strictly above the absolute value of every root.
    pub fn root_bound(&self) -> Rational {
        let lc = match self.leading() {
            Some(lc) => lc.abs(),
            None => return Rational::one(),
        };
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        let cauchy = m + Rational::one();
        let mut b = Rational::one();
        while b <= cauchy {
            b *= Rational::from_integer(2.into());
        }
        b
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings(s: &[String]) -> Result<Self> {
        Ok(Self::new(s.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = c.abs();
            let coef = if mag.is_one() && i > 0 {
                String::new()
            } else {
                format!("{mag}")
            };
            match i {
                0 => write!(f, "{sep}{coef}")?,
                1 => write!(f, "{sep}{coef}t")?,
                _ => write!(f, "{sep}{coef}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        UniPoly::from_strings(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn squarefree_examples() {
        let t1 = UniPoly::from_ints(&[1, 1]);
        assert_eq!(t1.pow(4).squarefree_part().unwrap(), t1);
        let u = UniPoly::from_ints(&[0, 0, 4, 8, 1]);
        assert_eq!(u.squarefree_part().unwrap(), UniPoly::from_ints(&[0, 4, 8, 1]));
        let v = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(v.squarefree_part().unwrap(), v);
        assert_eq!(UniPoly::zero().squarefree_part(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_factorization() {
        // (t-1)^2 t^3 (t+2)
        let u = UniPoly::from_roots(&[int(1), int(1), int(0), int(0), int(0), int(-2)]);
        let f = u.squarefree_factors().unwrap();
        assert_eq!(
            f,
            vec![
                (UniPoly::from_ints(&[2, 1]), 1),
                (UniPoly::from_ints(&[-1, 1]), 2),
                (UniPoly::from_ints(&[0, 1]), 3)
            ]
        );
    }

    #[test]
    fn division_and_shift() {
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let (q, r) = a.div_rem(&UniPoly::from_ints(&[-1, 1]));
        assert_eq!(q, UniPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.shift(&int(1)), UniPoly::from_ints(&[0, 2, 1]));
        assert_eq!(a.to_string(), "t^2 - 1");
    }
}
