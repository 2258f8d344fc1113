//! Exact real-root analysis of univariate rational polynomials.
//!
//! All counts are of *distinct* roots: multiplicities are removed by
//! [`squarefree_part`] before a Sturm chain is built.

mod sturm;
mod unipoly;

use num_traits::{Signed, Zero};
use serde::Serialize;

pub use sturm::{Bound, Interval, SturmChain};
pub use unipoly::UniPoly;

use crate::error::{Error, Result};
use crate::scalar::{f64_to_rational, format_rational, rational_to_f64, Rational};

pub fn squarefree_part(u: &UniPoly) -> Result<UniPoly> {
    u.squarefree_part()
}

pub fn sturm_sequence(u: &UniPoly) -> Result<SturmChain> {
    SturmChain::new(u)
}

/// Number of distinct real roots of `u` in `iv`.
pub fn count_real_roots(u: &UniPoly, iv: &Interval) -> Result<usize> {
    let s = u.squarefree_part()?;
    if s.degree() == Some(0) {
        // validate the interval even when there is nothing to count
        SturmChain::new(&UniPoly::from_ints(&[0, 1]))?.count(iv)?;
        return Ok(0);
    }
    SturmChain::new(&s)?.count(iv)
}

/// All complex roots of `u` are real (counted with multiplicity).
pub fn is_real_rooted(u: &UniPoly) -> Result<bool> {
    let d = u.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(true);
    }
    // the remainder chain of (u, u') ends in gcd(u, u') and counts the distinct
    // real roots of u, which must number deg u - deg gcd
    let chain = SturmChain::build_unchecked(u);
    let g = chain.sequence().last().and_then(UniPoly::degree).unwrap_or(0);
    Ok(chain.variations_at_infinity(false) - chain.variations_at_infinity(true) == d - g)
}

/// `u` has no root in `(0, inf)`.
pub fn no_positive_root(u: &UniPoly) -> Result<bool> {
    Ok(count_real_roots(u, &Interval::positive())? == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shortcut {
    True,
    Inconclusive,
}

/// Nonnegative coefficients (with positive leading coefficient) rule out positive roots.
///
/// For a real-rooted `u` the converse also holds: `Inconclusive` then means a
/// strictly positive root exists.
pub fn nonneg_coeff_shortcut(u: &UniPoly) -> Result<Shortcut> {
    match u.leading() {
        None => Err(Error::ZeroPolynomial),
        Some(lc) if !lc.is_positive() => Err(Error::NonPositiveLeading),
        Some(_) => Ok(if u.coeffs().iter().all(|c| !c.is_negative()) {
            Shortcut::True
        } else {
            Shortcut::Inconclusive
        }),
    }
}

/// Isolating interval for one distinct real root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rat")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub hi: Rational,
    /// `lo == hi` and the root is that rational.
    pub exact: bool,
    pub multiplicity: u32,
}

fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl RootInterval {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// `2^-bits`.
pub fn dyadic(bits: u32) -> Rational {
    Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(2), bits as usize))
}

/// Isolates every distinct real root of `u` to width at most `2^-bits`, ascending.
///
/// Roots that land on a bisection midpoint are reported exactly. Multiplicities
/// come from the square-free factorization of `u`.
pub fn isolate_roots(u: &UniPoly, bits: u32) -> Result<Vec<RootInterval>> {
    let s = u.squarefree_part()?;
    if s.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::build_unchecked(&s);
    let b = s.root_bound();
    let tol = dyadic(bits);
    let mut out = Vec::new();
    // stack of (lo, hi) with roots counted in (lo, hi]
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_half_open(&lo, &hi);
        if n == 0 {
            continue;
        }
        if chain.sign_of_input(&hi) == 0 && n == 1 {
            out.push((hi.clone(), hi, true));
            continue;
        }
        if n == 1 && &hi - &lo <= tol {
            out.push((lo, hi, false));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    let factors = u.squarefree_factors()?;
    let factor_chains: Vec<(SturmChain, u32)> = factors
        .iter()
        .map(|(f, k)| (SturmChain::build_unchecked(f), *k))
        .collect();
    out.into_iter()
        .map(|(lo, hi, exact)| {
            let mult = factor_chains
                .iter()
                .find(|(c, _)| {
                    if exact {
                        c.sign_of_input(&lo) == 0
                    } else {
                        c.count_half_open(&lo, &hi) > 0
                    }
                })
                .map(|(_, k)| *k)
                .unwrap_or(1);
            Ok(RootInterval {
                lo,
                hi,
                exact,
                multiplicity: mult,
            })
        })
        .collect()
}

/// Upper bound `mu` on the largest real root with `mu - r_max <= 2^-bits`.
/// `None` when `u` has no real root.
pub fn largest_root_upper(u: &UniPoly, bits: u32) -> Result<Option<Rational>> {
    extreme_root(u, bits, true)
}

/// Lower bound on the smallest real root within `2^-bits`.
pub fn smallest_root_lower(u: &UniPoly, bits: u32) -> Result<Option<Rational>> {
    extreme_root(u, bits, false)
}

fn extreme_root(u: &UniPoly, bits: u32, largest: bool) -> Result<Option<Rational>> {
    let s = u.squarefree_part()?;
    if s.degree() == Some(0) {
        return Ok(None);
    }
    let chain = SturmChain::build_unchecked(&s);
    if chain.variations_at_infinity(false) == chain.variations_at_infinity(true) {
        return Ok(None);
    }
    let b = s.root_bound();
    let tol = dyadic(bits);
    let two = Rational::from_integer(2.into());
    let (mut lo, mut hi) = (-b.clone(), b);
    if largest {
        // invariant: r_max in (lo, hi]
        while &hi - &lo > tol {
            let mid = (&lo + &hi) / &two;
            if chain.count_half_open(&mid, &hi) > 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(Some(hi))
    } else {
        // invariant: r_min in [lo, hi); roots in (lo, hi] plus lo itself
        while &hi - &lo > tol {
            let mid = (&lo + &hi) / &two;
            let below = chain.count_half_open(&lo, &mid) + usize::from(chain.sign_of_input(&lo) == 0);
            if below > 0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(Some(lo))
    }
}

/// Float estimate of the largest (`largest = true`) or smallest real root of a
/// real-rooted `u` by Newton's method started outside the root bound; Newton is
/// monotone there. `None` for constants.
pub fn float_extreme_root(u: &UniPoly, largest: bool) -> Option<f64> {
    let d = u.degree()?;
    if d == 0 {
        return None;
    }
    let c: Vec<f64> = u.coeffs().iter().map(rational_to_f64).collect();
    let b = rational_to_f64(&u.root_bound());
    let mut x = if largest { b } else { -b };
    for _ in 0..400 {
        let (mut p, mut dp) = (0.0, 0.0);
        for ci in c.iter().rev() {
            dp = dp * x + p;
            p = p * x + ci;
        }
        if p == 0.0 || dp == 0.0 || !p.is_finite() || !dp.is_finite() {
            break;
        }
        let step = p / dp;
        let next = x - step;
        if (largest && next >= x) || (!largest && next <= x) {
            break;
        }
        x = next;
        if step.abs() <= 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    Some(x)
}

/// `u` has no root in `(s, inf)`, certified by the coefficients of `u(t + s)` all
/// having the sign of the leading one. Sound for any `u`; also necessary when `u`
/// is real-rooted.
pub fn roots_at_most(u: &UniPoly, s: &Rational) -> bool {
    let v = u.shift(s);
    let Some(lc) = v.leading() else { return false };
    let pos = lc.is_positive();
    v.coeffs()
        .iter()
        .all(|c| c.is_zero() || c.is_positive() == pos)
}

/// Same contract as [`largest_root_upper`] for real-rooted `u`, usually much cheaper:
/// a float estimate is rounded up to the `2^-(bits+2)` grid and certified with
/// [`roots_at_most`]. Falls back to bisection when the certificate fails.
///
/// If `u` is not real-rooted the result still bounds every real root from above,
/// but it may be far from the largest one.
pub fn largest_root_upper_real_rooted(u: &UniPoly, bits: u32) -> Result<Option<Rational>> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let Some(r) = float_extreme_root(u, true).filter(|r| r.is_finite()) else {
        return largest_root_upper(u, bits);
    };
    let grid = dyadic(bits + 2);
    let tol = dyadic(bits);
    let mut slack = 1e-12 * r.abs().max(1.0);
    for _ in 0..4 {
        let Ok(est) = f64_to_rational(r + slack) else { break };
        let mu = (est / &grid).ceil() * &grid;
        if roots_at_most(u, &mu) {
            // tight when some root exceeds mu - 2^-bits
            if !roots_at_most(u, &(&mu - &tol)) {
                return Ok(Some(mu));
            }
            break;
        }
        slack *= 1024.0;
    }
    largest_root_upper(u, bits)
}
