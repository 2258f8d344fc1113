//! Scalar abstractions shared by the polynomial and matrix kernels.
//!
//! Everything algebraic in this crate is generic over [`Scalar`]. The exact
//! pipelines instantiate it with [`Rational`]; the numeric solver and the
//! tangency search instantiate it with `f64`.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = BigRational;

/// A commutative field-like scalar.
///
/// `f32`/`f64` satisfy this only approximately; anything that needs exact
/// zero tests (division checks, sign decisions) is additionally bounded by
/// [`Exact`].
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Scalars whose arithmetic is exact.
pub trait Exact: Scalar + Ord + Signed {
    /// A positive `c` with `c * x` integral for every `x` in `values`.
    fn clearing_factor<'a>(values: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        let _ = values;
        Self::one()
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

impl Exact for Rational {
    fn clearing_factor<'a>(values: impl IntoIterator<Item = &'a Self>) -> Self {
        Rational::from_integer(common_denominator(values))
    }
}

/// Integral domain elements that support exact division by a known divisor.
///
/// Used by fraction-free elimination: the quotient is only ever requested when
/// the dividend is known to be a multiple of the divisor.
pub trait ExactDiv: Sized {
    fn exact_div(&self, divisor: &Self) -> Result<Self>;
}

impl ExactDiv for f64 {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if *divisor == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self / divisor)
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / divisor)
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Conversion that stays finite for huge numerators/denominators.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = ToPrimitive::to_f64(r) {
        if v.is_finite() {
            return v;
        }
    }
    let n = r.numer();
    let d = r.denom();
    // bring both into f64 range by dropping low bits
    let nb = n.bits().saturating_sub(60);
    let db = d.bits().saturating_sub(60);
    let nf = (n >> nb).to_f64().unwrap_or(0.0);
    let df = (d >> db).to_f64().unwrap_or(1.0);
    nf / df * 2f64.powi(nb as i32 - db as i32)
}

/// Exact rational value of a finite float.
pub fn f64_to_rational(v: f64) -> Result<Rational> {
    Rational::from_f64(v).ok_or_else(|| Error::Parse(format!("non-finite value {v}")))
}

/// Parses `"n"`, `"n/d"` or a plain decimal such as `"0.5"`, reducing the result.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let n = BigInt::from_str(&digits).map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
}

/// Canonical `"num/den"` rendering used by every file format.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a comma-separated point such as `"1,1,0,0"` or `"1/2,-3"`.
pub fn parse_point(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

pub fn point_to_strings(p: &[Rational]) -> Vec<String> {
    p.iter().map(format_rational).collect()
}

pub fn point_to_f64(p: &[Rational]) -> Vec<f64> {
    p.iter().map(rational_to_f64).collect()
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Largest absolute value, zero for an empty slice.
pub fn max_abs(values: &[Rational]) -> Rational {
    values
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Simplest rational within `tol` of `x` whose denominator does not exceed `max_den`,
/// found from the continued-fraction expansion of `x`.
pub fn best_rational(x: f64, max_den: u64, tol: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let target = Rational::from_f64(x)?;
    let max_den = BigInt::from(max_den.max(1));
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    let mut best: Option<Rational> = None;
    loop {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > max_den {
            break;
        }
        let cand = Rational::new(p2.clone(), q2.clone());
        let err = rational_to_f64(&(&cand - &target)).abs();
        best = Some(cand);
        if err <= tol {
            break;
        }
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    best
}

/// Nearest multiple of `1/den` to `x`.
pub fn round_to_grid(x: f64, den: u64) -> Option<Rational> {
    let scaled = Rational::from_f64(x)? * Rational::from_integer(BigInt::from(den));
    Some(Rational::new(scaled.round().to_integer(), BigInt::from(den)))
}

impl From<std::num::ParseIntError> for Error {
    fn from(e: std::num::ParseIntError) -> Self {
        Error::Parse(e.to_string())
    }
}
