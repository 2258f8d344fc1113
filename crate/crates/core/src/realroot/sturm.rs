use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational};

/// Sturm chain `p0 = u, p1 = u', p_{k+1} = -rem(p_{k-1}, p_k)` with every remainder
/// divided by its positive content.
#[derive(Clone, Debug)]
pub struct SturmChain {
    sequence: Vec<UniPoly>,
    // positive integer multiples of `sequence`, for sign evaluation
    ints: Vec<Vec<BigInt>>,
}

impl SturmChain {
    /// Requires `u` square-free and nonconstant.
    pub fn new(u: &UniPoly) -> Result<Self> {
        match u.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        if u.gcd(&u.derivative()).degree() != Some(0) {
            return Err(Error::InvalidInput("Sturm chain input must be square-free".into()));
        }
        Ok(Self::build_unchecked(u))
    }

    pub(crate) fn build_unchecked(u: &UniPoly) -> Self {
        let mut seq = vec![u.clone(), u.derivative()];
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg().primitive());
        }
        let ints = seq.iter().map(UniPoly::integer_coeffs).collect();
        SturmChain { sequence: seq, ints }
    }

    pub fn sequence(&self) -> &[UniPoly] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sign variations at a finite point; zeros are skipped.
    pub fn variations_at(&self, t: &Rational) -> usize {
        count_variations(self.ints.iter().map(|c| sign_at(c, t)))
    }

    /// Sign variations at `+inf` (`positive = true`) or `-inf`, from leading terms only.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.ints.iter().map(|c| {
            let lc = c.last().expect("chain entries are nonzero");
            let s = if lc.is_positive() { 1 } else { -1 };
            if !positive && (c.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    pub fn sign_of_input(&self, t: &Rational) -> i8 {
        sign_at(&self.ints[0], t)
    }

    fn variations(&self, b: &Bound) -> usize {
        match b {
            Bound::NegInf => self.variations_at_infinity(false),
            Bound::PosInf => self.variations_at_infinity(true),
            Bound::Open(t) | Bound::Closed(t) => self.variations_at(t),
        }
    }

    /// Distinct roots of the chain's input polynomial inside `iv`.
    pub fn count(&self, iv: &Interval) -> Result<usize> {
        iv.validate()?;
        // V(a) - V(b) counts roots in (a, b]
        let mut n = self.variations(&iv.lo) as i64 - self.variations(&iv.hi) as i64;
        if let Bound::Open(b) = &iv.hi {
            if self.sign_of_input(b) == 0 {
                n -= 1;
            }
        }
        if let Bound::Closed(a) = &iv.lo {
            if self.sign_of_input(a) == 0 {
                n += 1;
            }
        }
        Ok(n.max(0) as usize)
    }

    /// Roots in `(a, b]` for finite `a < b`.
    pub(crate) fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Sign of `sum c_i t^i` via the homogenized integer form `sum c_i p^i q^(d-i)` with `t = p/q`, `q > 0`.
pub(crate) fn sign_at(c: &[BigInt], t: &Rational) -> i8 {
    let p = t.numer();
    let q = t.denom();
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    // Horner in p; the power of q grows with each lower coefficient
    for ci in c.iter().rev() {
        acc = acc * p + ci * &qpow;
        qpow *= q;
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

/// Interval endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Open(Rational),
    Closed(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn real_line() -> Self {
        Interval {
            lo: Bound::NegInf,
            hi: Bound::PosInf,
        }
    }

    pub fn positive() -> Self {
        Interval {
            lo: Bound::Open(Rational::zero()),
            hi: Bound::PosInf,
        }
    }

    pub fn open(a: Rational, b: Rational) -> Self {
        Interval {
            lo: Bound::Open(a),
            hi: Bound::Open(b),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedInterval(m.into()));
        match (&self.lo, &self.hi) {
            (Bound::PosInf, _) => bad("lower bound is +inf"),
            (_, Bound::NegInf) => bad("upper bound is -inf"),
            (Bound::Open(a) | Bound::Closed(a), Bound::Open(b) | Bound::Closed(b)) => {
                match a.cmp(b) {
                    Ordering::Greater => bad("lower bound exceeds upper bound"),
                    Ordering::Equal
                        if !(matches!(self.lo, Bound::Closed(_))
                            && matches!(self.hi, Bound::Closed(_))) =>
                    {
                        bad("empty interval")
                    }
                    _ => Ok(()),
                }
            }
            _ => Ok(()),
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.lo {
            Bound::NegInf => f.write_str("(-inf")?,
            Bound::PosInf => f.write_str("(+inf")?,
            Bound::Open(a) => write!(f, "({}", format_rational(a))?,
            Bound::Closed(a) => write!(f, "[{}", format_rational(a))?,
        }
        match &self.hi {
            Bound::NegInf => f.write_str(", -inf)"),
            Bound::PosInf => f.write_str(", +inf)"),
            Bound::Open(b) => write!(f, ", {})", format_rational(b)),
            Bound::Closed(b) => write!(f, ", {}]", format_rational(b)),
        }
    }
}
