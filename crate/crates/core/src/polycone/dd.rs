//! Incremental double description.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{dot, primitive_int};
use crate::scalar::Rational;

/// Generators of `{x : <a, x> >= 0 for all a in constraints}`.
///
/// Starts from the whole space (lineality basis = unit vectors, no rays) and
/// adds the constraints one at a time. Lineality directions come back as
/// `l` and `-l`.
pub fn dual_generators(dim: usize, constraints: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut lin: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut done: Vec<&Vec<BigInt>> = Vec::new();

    for a in constraints {
        if let Some(pos) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lin.remove(pos);
            let mut s0 = dot(a, &l0);
            if s0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                s0 = -s0;
            }
            // project the rest of the space onto a^perp along l0
            let project = |v: &Vec<BigInt>| -> Vec<BigInt> {
                let s = dot(a, v);
                if s.is_zero() {
                    return v.clone();
                }
                primitive_int(v.iter().zip(&l0).map(|(x, y)| &s0 * x - &s * y).collect())
            };
            lin = lin.iter().map(project).collect();
            rays = rays.iter().map(project).collect();
            rays.push(primitive_int(l0));
        } else {
            let signs: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
            let mut next: Vec<Vec<BigInt>> = Vec::new();
            for (r, s) in rays.iter().zip(&signs) {
                if !s.is_negative() {
                    next.push(r.clone());
                }
            }
            // pairs only exist when the pointed part has dimension >= 2
            let target_rank = (dim - lin.len()).saturating_sub(2);
            for (i, (p, sp)) in rays.iter().zip(&signs).enumerate() {
                if !sp.is_positive() {
                    continue;
                }
                for (j, (n, sn)) in rays.iter().zip(&signs).enumerate() {
                    if !sn.is_negative() || !adjacent(&rays, i, j, &done, target_rank) {
                        continue;
                    }
                    let comb: Vec<BigInt> =
                        p.iter().zip(n).map(|(x, y)| sp * y - sn * x).collect();
                    next.push(primitive_int(comb));
                }
            }
            rays = next;
        }
        done.push(a);
        rays.sort();
        rays.dedup();
    }

    let mut out = rays;
    for l in lin {
        let l = primitive_int(l);
        out.push(l.iter().map(|x| -x).collect());
        out.push(l);
    }
    out
}

/// Rays `i` and `j` span a 2-face: the constraints tight at both have rank `target`.
fn adjacent(
    rays: &[Vec<BigInt>],
    i: usize,
    j: usize,
    constraints: &[&Vec<BigInt>],
    target: usize,
) -> bool {
    let tight: Vec<&Vec<BigInt>> = constraints
        .iter()
        .copied()
        .filter(|a| dot(a, &rays[i]).is_zero() && dot(a, &rays[j]).is_zero())
        .collect();
    tight.len() >= target && rank(&tight) == target
}

pub(crate) fn rank(rows: &[&Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[r][c];
            for k in c..cols {
                let t = &f * &m[r][k];
                m[i][k] -= t;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}
