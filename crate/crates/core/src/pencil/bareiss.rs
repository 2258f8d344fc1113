//! Fraction-free determinants over integral domains.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Result;
use crate::ring::Poly;
use crate::scalar::{Exact, ExactDiv, Rational};

/// Integral domain operations needed by [`bareiss_det`].
pub trait Domain: Clone + ExactDiv + Send + Sync {
    fn is_zero_elem(&self) -> bool;
    /// `a * b - c * d`.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Domain for Rational {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        a * b - c * d
    }

    fn negate(&self) -> Self {
        -self
    }
}

impl Domain for f64 {
    fn is_zero_elem(&self) -> bool {
        *self == 0.0
    }

    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        a * b - c * d
    }

    fn negate(&self) -> Self {
        -self
    }
}

impl<T: Exact> Domain for Poly<T> {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let ab = if a.is_zero() || b.is_zero() { Poly::zero(a.nvars()) } else { a * b };
        if c.is_zero() || d.is_zero() {
            ab
        } else {
            &ab - &(c * d)
        }
    }

    fn negate(&self) -> Self {
        -self
    }
}

/// Determinant of a square matrix by Bareiss elimination with row swaps.
///
/// Every division is exact in the domain, so the kernel works over polynomial rings.
/// `one` is the multiplicative identity (needed for the empty matrix and the first step).
pub fn bareiss_det<D: Domain>(mut a: Vec<Vec<D>>, one: D) -> Result<D> {
    let n = a.len();
    if n == 0 {
        return Ok(one);
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero_elem()) else {
            return Ok(a[k][k].clone());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        rest.par_iter_mut().try_for_each(|row| -> Result<()> {
            for j in (k + 1)..n {
                let v = D::cross(&pivot_row[k], &row[j], &row[k], &pivot_row[j]);
                row[j] = v.exact_div(&prev)?;
            }
            Ok(())
        })?;
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.negate() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use crate::scalar::int;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn rational_determinants() {
        assert_eq!(bareiss_det(q(&[&[2, 1], &[1, 3]]), int(1)).unwrap(), int(5));
        assert_eq!(bareiss_det(q(&[&[0, 1], &[1, 0]]), int(1)).unwrap(), int(-1));
        assert_eq!(bareiss_det(q(&[&[1, 2], &[2, 4]]), int(1)).unwrap(), int(0));
        assert_eq!(
            bareiss_det(q(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]), int(1)).unwrap(),
            int(-6)
        );
        assert_eq!(bareiss_det(Vec::<Vec<Rational>>::new(), int(1)).unwrap(), int(1));
    }

    #[test]
    fn polynomial_determinant() {
        let p = |s: &str| parse_poly(s, 3).unwrap();
        let m = vec![vec![p("x1+x2"), p("x3")], vec![p("x3"), p("x1-x2")]];
        let one = p("1");
        assert_eq!(bareiss_det(m, one).unwrap(), p("x1^2 - x2^2 - x3^2"));
    }
}
