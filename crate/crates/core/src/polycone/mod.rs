//! Finitely generated polyhedral cones over the rationals.
//!
//! Vectors are stored as primitive integer vectors. Scaling by a positive
//! number never changes a ray or a form, so the orientation of the input is
//! always preserved.

mod dd;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{common_denominator, parse_rational, Rational};

pub use dd::dual_generators;

/// Largest dimension accepted by [`dual_cone`].
pub const MAX_DIM: usize = 12;

/// A linear form `x -> sum c_i x_i` with primitive integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinForm {
    coeffs: Vec<BigInt>,
}

impl LinForm {
    pub fn new(coeffs: &[Rational]) -> Self {
        LinForm {
            coeffs: primitive(coeffs),
        }
    }

    pub fn from_ints(coeffs: Vec<BigInt>) -> Self {
        LinForm {
            coeffs: primitive_int(coeffs),
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.coeffs.iter().cloned().map(Rational::from_integer).collect()
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, v: &[Rational]) -> Result<Rational> {
        if v.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: v.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(v)
            .fold(Rational::zero(), |acc, (c, x)| acc + x * c))
    }

    pub fn eval_int(&self, v: &[BigInt]) -> BigInt {
        dot(&self.coeffs, v)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl std::fmt::Display for LinForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// `(2/3, 4/3) -> (1, 2)`; `(-2, -4) -> (-1, -2)` (the sign is kept, since it
/// fixes which halfspace the form describes); the zero form stays zero.
pub fn canonicalize_form(coeffs: &[Rational]) -> LinForm {
    LinForm::new(coeffs)
}

/// Cone generated by finitely many nonzero rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayCone {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
}

impl RayCone {
    pub fn new(dim: usize, rays: &[Vec<Rational>]) -> Result<Self> {
        let rays = rays
            .iter()
            .map(|r| {
                if r.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: r.len(),
                    });
                }
                if r.iter().all(Zero::is_zero) {
                    return Err(Error::InvalidInput("zero ray".into()));
                }
                Ok(primitive(r))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RayCone { dim, rays })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn rays_rational(&self) -> Vec<Vec<Rational>> {
        self.rays
            .iter()
            .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
            .collect()
    }

    /// Drops ray `i`.
    pub fn without(&self, i: usize) -> RayCone {
        let mut rays = self.rays.clone();
        rays.remove(i);
        RayCone { dim: self.dim, rays }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&RayConeJson::from_cone(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: RayConeJson = serde_json::from_str(s)?;
        j.to_cone()
    }
}

/// `{"dim": n, "rays": [["int", ..], ..]}`; entries may also be `"num/den"` on input.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RayConeJson {
    pub dim: usize,
    pub rays: Vec<Vec<String>>,
}

impl RayConeJson {
    pub fn from_cone(c: &RayCone) -> Self {
        RayConeJson {
            dim: c.dim,
            rays: c
                .rays
                .iter()
                .map(|r| r.iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }

    pub fn from_forms(dim: usize, forms: &[LinForm]) -> Self {
        RayConeJson {
            dim,
            rays: forms.iter().map(LinForm::to_strings).collect(),
        }
    }

    pub fn to_cone(&self) -> Result<RayCone> {
        let rays = self
            .rays
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RayCone::new(self.dim, &rays)
    }
}

/// Generators of `{l : l(r) >= 0 for all rays r}`, sorted.
///
/// A lineality direction `l` of the dual is reported as the pair `l, -l`.
pub fn dual_cone(c: &RayCone) -> Result<Vec<LinForm>> {
    if c.dim > MAX_DIM {
        return Err(Error::DimensionBound(MAX_DIM));
    }
    let mut rays = c.rays.clone();
    rays.sort();
    rays.dedup();
    Ok(dual_generators(c.dim, &rays)
        .into_iter()
        .map(LinForm::from_ints)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect())
}

/// `v` lies in the cone described by `dual` (the output of [`dual_cone`]).
pub fn member(c: &RayCone, v: &[Rational], dual: &[LinForm]) -> Result<bool> {
    if v.len() != c.dim {
        return Err(Error::DimensionMismatch {
            expected: c.dim,
            got: v.len(),
        });
    }
    for l in dual {
        if l.eval(v)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(v);
    primitive_int(
        v.iter()
            .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

pub(crate) fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}
