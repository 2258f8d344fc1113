use serde::Serialize;

use crate::error::{Error, Result};
use crate::pencil::{SymMatrix, SymPencil};
use crate::ring::{Poly, PolyVec};
use crate::scalar::{format_rational, Rational};

/// `p = sum g_i f_i` for a constant cofactor `g`. A zero result means the
/// solution was degenerate.
pub fn derived_p(f: &PolyVec<Rational>, g: &PolyVec<Rational>) -> Result<Poly<Rational>> {
    if f.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: f.len(),
            got: g.len(),
        });
    }
    if g.entries().iter().any(|gi| gi.total_degree().is_some_and(|k| k > 0)) {
        return Err(Error::NonConstantCofactor);
    }
    f.dot(g)
}

/// For each variable `i`: `dh/dx_i p - h dp/dx_i == f^T A_i f`, exactly.
pub fn check_mixed_identity(
    h: &Poly<Rational>,
    p: &Poly<Rational>,
    f: &PolyVec<Rational>,
    pencil: &SymPencil<Rational>,
) -> Result<Vec<bool>> {
    let n = h.nvars();
    if p.nvars() != n || f.nvars() != n {
        return Err(Error::NvarsMismatch(n, p.nvars().max(f.nvars())));
    }
    if pencil.nvars() != n {
        return Err(Error::NvarsMismatch(n, pencil.nvars()));
    }
    (0..n)
        .map(|i| {
            let lhs = h.partial_derivative(i)?.checked_mul(p)?.checked_sub(&h.checked_mul(&p.partial_derivative(i)?)?)?;
            Ok(lhs == quadratic_form(pencil.matrix(i), f)?)
        })
        .collect()
}

/// `f^T M f`.
pub fn quadratic_form(m: &SymMatrix<Rational>, f: &PolyVec<Rational>) -> Result<Poly<Rational>> {
    if m.size() != f.len() {
        return Err(Error::Shape(format!("{}x{} matrix against a vector of length {}", m.size(), m.size(), f.len())));
    }
    let mut acc = Poly::zero(f.nvars());
    for i in 0..m.size() {
        for j in 0..m.size() {
            let c = m.get(i, j);
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            acc = acc.checked_add(&f.get(i).checked_mul(f.get(j))?.scale(c))?;
        }
    }
    Ok(acc)
}

/// `f^T M f = sum_i weights[i] * squares[i]^2` with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct SosCertificate {
    pub weights: Vec<Rational>,
    pub squares: Vec<Poly<Rational>>,
    /// The weighted sum re-expands to `f^T M f` exactly.
    pub verified: bool,
}

#[derive(Serialize)]
struct SosTermJson {
    weight: String,
    square_of: String,
}

impl SosCertificate {
    pub fn to_json(&self) -> String {
        let terms: Vec<SosTermJson> = self
            .weights
            .iter()
            .zip(&self.squares)
            .map(|(w, s)| SosTermJson {
                weight: format_rational(w),
                square_of: s.to_string(),
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({ "verified": self.verified, "terms": terms }))
            .expect("serializable")
    }
}

/// Weighted sum-of-squares witness for `f^T M f` from `M = L D L^T`.
pub fn sos_witness_check(f: &PolyVec<Rational>, m: &SymMatrix<Rational>) -> Result<SosCertificate> {
    if m.size() != f.len() {
        return Err(Error::Shape(format!("{}x{} matrix against a vector of length {}", m.size(), m.size(), f.len())));
    }
    let ldl = m.ldl()?;
    let k = m.size();
    // (L^T f)_i = f_i + sum_{j > i} l[j][i] f_j
    let squares = (0..k)
        .map(|i| {
            let mut s = f.get(i).clone();
            for j in (i + 1)..k {
                s = s.checked_add(&f.get(j).scale(&ldl.l[j][i]))?;
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sum = Poly::zero(f.nvars());
    for (w, s) in ldl.d.iter().zip(&squares) {
        sum = sum.checked_add(&s.checked_mul(s)?.scale(w))?;
    }
    let verified = sum == quadratic_form(m, f)?;
    Ok(SosCertificate {
        weights: ldl.d,
        squares,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use crate::scalar::int;

    fn p3(s: &str) -> Poly<Rational> {
        parse_poly(s, 3).unwrap()
    }

    fn quadric_pencil() -> SymPencil<Rational> {
        let m = |r: [[i64; 2]; 2]| {
            SymMatrix::from_rows(r.iter().map(|row| row.iter().map(|&v| int(v)).collect()).collect()).unwrap()
        };
        SymPencil::new(vec![m([[1, 0], [0, 1]]), m([[-1, 0], [0, 1]]), m([[0, -1], [-1, 0]])]).unwrap()
    }

    #[test]
    fn quadric_identities() {
        let f = PolyVec::new(vec![p3("x1 + x2"), p3("x3")]).unwrap();
        let g = PolyVec::new(vec![Poly::constant(3, int(1)), Poly::zero(3)]).unwrap();
        let p = derived_p(&f, &g).unwrap();
        assert_eq!(p, p3("x1 + x2"));
        let h = p3("x1^2 - x2^2 - x3^2");
        assert_eq!(check_mixed_identity(&h, &p, &f, &quadric_pencil()).unwrap(), vec![true; 3]);
        let mut bad = quadric_pencil();
        bad.matrix_mut(0).set(1, 1, int(2));
        assert_eq!(check_mixed_identity(&h, &p, &f, &bad).unwrap(), vec![false, true, true]);
    }

    #[test]
    fn derived_p_edge_cases() {
        let f = PolyVec::new(vec![p3("x1 + x2"), p3("x3")]).unwrap();
        assert!(derived_p(&f, &PolyVec::zeros(3, 2)).unwrap().is_zero());
        let g = PolyVec::new(vec![p3("x1"), Poly::zero(3)]).unwrap();
        assert_eq!(derived_p(&f, &g).unwrap_err(), Error::NonConstantCofactor);
    }

    #[test]
    fn sos_witnesses() {
        let f = PolyVec::new(vec![p3("x1"), p3("x2")]).unwrap();
        let id = SymMatrix::identity(2);
        let c = sos_witness_check(&f, &id).unwrap();
        assert!(c.verified);
        assert_eq!(c.weights, vec![int(1), int(1)]);
        let f = PolyVec::new(vec![p3("x1 + x2"), p3("x3")]).unwrap();
        let c = sos_witness_check(&f, &id).unwrap();
        assert_eq!(c.squares, vec![p3("x1 + x2"), p3("x3")]);
        let a = SymMatrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(2)]]).unwrap();
        let c = sos_witness_check(&f, &a).unwrap();
        assert!(c.verified && c.weights.iter().all(|w| w > &int(0)));
        let indef = SymMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(1)]]).unwrap();
        assert_eq!(sos_witness_check(&f, &indef).unwrap_err(), Error::NotPositiveDefinite);
    }
}
