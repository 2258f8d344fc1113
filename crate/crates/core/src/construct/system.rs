use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hyperbolic::HyperbolicInstance;
use crate::pencil::{SymMatrix, SymPencil};
use crate::ring::{Homogeneity, Monomial, Poly, PolyVec};
use crate::scalar::{format_rational, Rational, Scalar};

/// What an unknown stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unknown {
    /// Entry `(i, j)`, `i <= j`, of `A_k` (0-based).
    Pencil { k: usize, i: usize, j: usize },
    /// Coefficient of `monomial` in entry `entry` of `g`.
    Cofactor { entry: usize, monomial: Monomial },
}

/// One equation: the coefficient of `monomial` in entry `entry` of `A(x) f - h g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub entry: usize,
    pub monomial: Monomial,
}

/// Shape data `(n, m, d, d')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Meta {
    pub n: usize,
    pub m: usize,
    pub d: u32,
    pub d_prime: u32,
}

/// The linear conditions `A(x) f = h g` on the entries of `A_1..A_n` and the
/// coefficients of `g`.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    meta: Meta,
    h: Poly<Rational>,
    f: PolyVec<Rational>,
    g_monomials: Vec<Monomial>,
    rows: Vec<Vec<(usize, Rational)>>,
    rhs: Vec<Rational>,
    labels: Vec<Option<Equation>>,
}

/// Builds the system. `f` must have entries homogeneous of degree `d'` (or zero),
/// `d' >= deg h - 1`, and at least one entry not divisible by `h`.
pub fn assemble_constraints(
    inst: &HyperbolicInstance,
    f: &PolyVec<Rational>,
    d_prime: u32,
) -> Result<ConstraintSystem> {
    let h = inst.h();
    let n = h.nvars();
    let d = inst.degree();
    if f.nvars() != n {
        return Err(Error::NvarsMismatch(n, f.nvars()));
    }
    let m = f.len();
    if m == 0 {
        return Err(Error::InvalidInput("f has no entries".into()));
    }
    if d_prime + 1 < d {
        return Err(Error::DegreeMismatch(format!("d' = {d_prime} is below deg h - 1 = {}", d - 1)));
    }
    for (i, fi) in f.entries().iter().enumerate() {
        match fi.homogeneity() {
            Homogeneity::Zero => {}
            Homogeneity::Degree(k) if k == d_prime => {}
            _ => {
                return Err(Error::DegreeMismatch(format!(
                    "entry {} of f is not homogeneous of degree {d_prime}",
                    i + 1
                )))
            }
        }
    }
    if f.entries().iter().all(|fi| h.divides(fi)) {
        return Err(Error::DivisibilityPrecondition);
    }

    let g_monomials = Monomial::all_of_degree(n, d_prime + 1 - d);
    let eq_monomials = Monomial::all_of_degree(n, d_prime + 1);
    let pos: HashMap<&Monomial, usize> = eq_monomials.iter().enumerate().map(|(i, mu)| (mu, i)).collect();
    let tri = m * (m + 1) / 2;
    let meta = Meta { n, m, d, d_prime };
    let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); m * eq_monomials.len()];
    let mut add = |r: usize, mu: &Monomial, col: usize, c: Rational| {
        let row = r * eq_monomials.len() + pos[mu];
        *acc[row].entry(col).or_insert_with(Rational::zero) += c;
    };

    // A_k[r][j] x_k f_j contributes to entry r
    for k in 0..n {
        let xk = Monomial::var(n, k);
        for r in 0..m {
            for j in 0..m {
                let col = k * tri + tri_index(m, r.min(j), r.max(j));
                for (mono, c) in f.get(j).terms() {
                    add(r, &mono.mul(&xk), col, c.clone());
                }
            }
        }
    }
    // - h g_r
    for r in 0..m {
        for (t, nu) in g_monomials.iter().enumerate() {
            let col = n * tri + r * g_monomials.len() + t;
            for (mono, c) in h.terms() {
                add(r, &mono.mul(nu), col, -c.clone());
            }
        }
    }

    let rows: Vec<Vec<(usize, Rational)>> = acc
        .into_iter()
        .map(|row| row.into_iter().filter(|(_, c)| !c.is_zero()).collect())
        .collect();
    let labels = (0..m)
        .flat_map(|r| {
            eq_monomials.iter().map(move |mu| {
                Some(Equation {
                    entry: r,
                    monomial: mu.clone(),
                })
            })
        })
        .collect();
    Ok(ConstraintSystem {
        meta,
        h: h.clone(),
        f: f.clone(),
        g_monomials,
        rhs: vec![Rational::zero(); rows.len()],
        rows,
        labels,
    })
}

/// Position of `(i, j)`, `i <= j`, in the row-major upper triangle of an `m x m` matrix.
fn tri_index(m: usize, i: usize, j: usize) -> usize {
    i * m - i * (i + 1) / 2 + j
}

impl ConstraintSystem {
    pub fn meta(&self) -> Meta {
        self.meta
    }

    pub fn h(&self) -> &Poly<Rational> {
        &self.h
    }

    pub fn f(&self) -> &PolyVec<Rational> {
        &self.f
    }

    fn tri(&self) -> usize {
        self.meta.m * (self.meta.m + 1) / 2
    }

    pub fn num_pencil_unknowns(&self) -> usize {
        self.meta.n * self.tri()
    }

    pub fn num_unknowns(&self) -> usize {
        self.num_pencil_unknowns() + self.meta.m * self.g_monomials.len()
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    /// Sparse rows `(column, coefficient)`.
    pub fn rows(&self) -> &[Vec<(usize, Rational)>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// `None` for rows added with [`Self::push_equation`].
    pub fn equation(&self, row: usize) -> Option<&Equation> {
        self.labels.get(row).and_then(Option::as_ref)
    }

    pub fn g_monomials(&self) -> &[Monomial] {
        &self.g_monomials
    }

    pub fn pencil_index(&self, k: usize, i: usize, j: usize) -> usize {
        k * self.tri() + tri_index(self.meta.m, i.min(j), i.max(j))
    }

    pub fn unknown(&self, idx: usize) -> Option<Unknown> {
        let (n, m, tri) = (self.meta.n, self.meta.m, self.tri());
        if idx < n * tri {
            let k = idx / tri;
            let mut rest = idx % tri;
            for i in 0..m {
                let len = m - i;
                if rest < len {
                    return Some(Unknown::Pencil { k, i, j: i + rest });
                }
                rest -= len;
            }
            unreachable!()
        }
        let idx = idx - n * tri;
        let per = self.g_monomials.len();
        (idx < m * per).then(|| Unknown::Cofactor {
            entry: idx / per,
            monomial: self.g_monomials[idx % per].clone(),
        })
    }

    /// Appends the equation `sum c x = rhs`.
    pub fn push_equation(&mut self, coeffs: Vec<(usize, Rational)>, rhs: Rational) -> Result<()> {
        if let Some(&(c, _)) = coeffs.iter().find(|(c, _)| *c >= self.num_unknowns()) {
            return Err(Error::IndexOutOfRange {
                index: c,
                size: self.num_unknowns(),
            });
        }
        self.rows.push(coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        self.rhs.push(rhs);
        self.labels.push(None);
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.num_unknowns() {
            return Err(Error::DimensionMismatch {
                expected: self.num_unknowns(),
                got: len,
            });
        }
        Ok(())
    }

    /// The pencil part of an unknown vector.
    pub fn pencil_from<T: Scalar>(&self, x: &[T]) -> Result<SymPencil<T>> {
        self.check_len(x.len())?;
        let m = self.meta.m;
        let mats = (0..self.meta.n)
            .map(|k| SymMatrix::from_upper(m, |i, j| x[self.pencil_index(k, i, j)].clone()))
            .collect();
        SymPencil::new(mats)
    }

    /// The cofactor part of an unknown vector.
    pub fn cofactor_from<T: Scalar>(&self, x: &[T]) -> Result<PolyVec<T>> {
        self.check_len(x.len())?;
        let base = self.num_pencil_unknowns();
        let per = self.g_monomials.len();
        let entries = (0..self.meta.m)
            .map(|r| {
                let mut p = Poly::zero(self.meta.n);
                for (t, mu) in self.g_monomials.iter().enumerate() {
                    let c = &x[base + r * per + t];
                    if !c.is_zero() {
                        p.add_term(mu.clone(), c.clone());
                    }
                }
                p
            })
            .collect();
        PolyVec::new(entries)
    }

    /// Inverse of [`Self::pencil_from`] and [`Self::cofactor_from`].
    pub fn unknowns_from(&self, p: &SymPencil<Rational>, g: &PolyVec<Rational>) -> Result<Vec<Rational>> {
        let Meta { n, m, .. } = self.meta;
        if p.nvars() != n || p.size() != m || g.len() != m {
            return Err(Error::Shape("pencil or cofactor does not fit the system".into()));
        }
        let mut x = vec![Rational::zero(); self.num_unknowns()];
        for k in 0..n {
            for i in 0..m {
                for j in i..m {
                    x[self.pencil_index(k, i, j)] = p.matrix(k).get(i, j).clone();
                }
            }
        }
        let base = self.num_pencil_unknowns();
        let per = self.g_monomials.len();
        for (r, gr) in g.entries().iter().enumerate() {
            for (mono, c) in gr.terms() {
                let t = self
                    .g_monomials
                    .iter()
                    .position(|mu| mu == mono)
                    .ok_or_else(|| Error::DegreeMismatch("cofactor has a term of the wrong degree".into()))?;
                x[base + r * per + t] = c.clone();
            }
        }
        Ok(x)
    }

    /// `C x - b`, exactly.
    pub fn residual_exact(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x.len())?;
        Ok(self
            .rows
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| row.iter().map(|(c, v)| v * &x[*c]).sum::<Rational>() - b)
            .collect())
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> Result<bool> {
        Ok(self.residual_exact(x)?.iter().all(Zero::is_zero))
    }

    /// `max |C x - b|` in floating point.
    pub fn residual_f64(&self, x: &[f64]) -> f64 {
        let rhs: Vec<f64> = self.rhs.iter().map(Scalar::to_f64).collect();
        self.rows
            .iter()
            .zip(rhs)
            .map(|(row, b)| (row.iter().map(|(c, v)| v.to_f64() * x[*c]).sum::<f64>() - b).abs())
            .fold(0.0, f64::max)
    }

    pub(crate) fn dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|row| {
                let mut v = vec![Rational::zero(); self.num_unknowns()];
                for (c, x) in row {
                    v[*c] = x.clone();
                }
                v
            })
            .collect()
    }

    /// Matrix Market coordinate dump with exact `n/d` values; the right-hand side
    /// follows as `% rhs row value` comment lines.
    pub fn to_matrix_market(&self) -> String {
        let Meta { n, m, d, d_prime } = self.meta;
        let nnz: usize = self.rows.iter().map(Vec::len).sum();
        let mut s = String::from("%%MatrixMarket matrix coordinate real general\n");
        let _ = writeln!(s, "% n={n} m={m} d={d} d'={d_prime}");
        let _ = writeln!(s, "{} {} {nnz}", self.num_equations(), self.num_unknowns());
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                let _ = writeln!(s, "{} {} {}", r + 1, c + 1, format_rational(v));
            }
        }
        for (r, b) in self.rhs.iter().enumerate() {
            if !b.is_zero() {
                let _ = writeln!(s, "% rhs {} {}", r + 1, format_rational(b));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use crate::scalar::int;

    fn quadric() -> (HyperbolicInstance, PolyVec<Rational>) {
        let h = parse_poly("x1^2 - x2^2 - x3^2", 3).unwrap();
        let inst = HyperbolicInstance::new(h, vec![int(1), int(0), int(0)]).unwrap();
        let f = PolyVec::new(vec![parse_poly("x1 + x2", 3).unwrap(), parse_poly("x3", 3).unwrap()]).unwrap();
        (inst, f)
    }

    #[test]
    fn quadric_counts_and_known_solution() {
        let (inst, f) = quadric();
        let sys = assemble_constraints(&inst, &f, 1).unwrap();
        assert_eq!((sys.num_unknowns(), sys.num_equations()), (11, 12));
        let p = SymPencil::new(vec![
            SymMatrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap(),
            SymMatrix::from_rows(vec![vec![int(-1), int(0)], vec![int(0), int(1)]]).unwrap(),
            SymMatrix::from_rows(vec![vec![int(0), int(-1)], vec![int(-1), int(0)]]).unwrap(),
        ])
        .unwrap();
        let g = PolyVec::new(vec![Poly::constant(3, int(1)), Poly::zero(3)]).unwrap();
        let x = sys.unknowns_from(&p, &g).unwrap();
        assert!(sys.is_satisfied(&x).unwrap());
        assert_eq!(sys.pencil_from(&x).unwrap(), p);
        assert_eq!(sys.cofactor_from(&x).unwrap(), g);
        let mut bad = x.clone();
        bad[0] += int(1);
        assert!(!sys.is_satisfied(&bad).unwrap());
    }

    #[test]
    fn unknown_labels_round_trip() {
        let (inst, f) = quadric();
        let sys = assemble_constraints(&inst, &f, 1).unwrap();
        for idx in 0..sys.num_unknowns() {
            match sys.unknown(idx).unwrap() {
                Unknown::Pencil { k, i, j } => assert_eq!(sys.pencil_index(k, i, j), idx),
                Unknown::Cofactor { entry, .. } => assert!(entry < 2 && idx >= 9),
            }
        }
        assert!(sys.unknown(11).is_none());
        assert_eq!(sys.equation(0).unwrap().entry, 0);
    }

    #[test]
    fn preconditions() {
        let (inst, _) = quadric();
        let h = inst.h().clone();
        let f = PolyVec::new(vec![h.clone(), Poly::zero(3)]).unwrap();
        assert_eq!(assemble_constraints(&inst, &f, 2).unwrap_err(), Error::DivisibilityPrecondition);
        let f = PolyVec::new(vec![parse_poly("x1", 3).unwrap()]).unwrap();
        assert!(matches!(assemble_constraints(&inst, &f, 0), Err(Error::DegreeMismatch(_))));
        let f = PolyVec::new(vec![parse_poly("x1 + x2^2", 3).unwrap()]).unwrap();
        assert!(matches!(assemble_constraints(&inst, &f, 1), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn matrix_market_header() {
        let (inst, f) = quadric();
        let mut sys = assemble_constraints(&inst, &f, 1).unwrap();
        sys.push_equation(vec![], int(1)).unwrap();
        let mm = sys.to_matrix_market();
        assert!(mm.starts_with("%%MatrixMarket"));
        assert!(mm.contains("13 11 "));
        assert!(mm.contains("% rhs 13 1"));
    }
}
