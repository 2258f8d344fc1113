//! Seeded property suites shared by the module tests and the acceptance run.
#![allow(dead_code)]

use hypercone::pencil::{SymMatrix, SymPencil};
use hypercone::polycone::{dual_cone, member, RayCone};
use hypercone::realroot::{count_real_roots, Interval, UniPoly};
use hypercone::ring::{Monomial, Poly};
use hypercone::scalar::{int, Rational};
use hypercone::vamoslab::{builtin_vamos, exact_steps, VamosBundle};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Roots of `c[0] + c[1] t + ...` by Aberth iteration followed by Newton polishing.
pub fn float_roots(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lc = c[d];
    let monic: Vec<f64> = c.iter().map(|x| x / lc).collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &a in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let radius = 1.0 + monic[..d].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / d as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..d).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm());
        }
        if moved < 1e-15 * radius {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*zi);
            if dp.norm() > 0.0 {
                *zi -= p / dp;
            }
        }
    }
    z
}

/// Distinct real roots of an integer polynomial, and how many of them are positive,
/// from floating-point roots: imaginary parts within `1e-6` count as real, and
/// real roots within `1e-6` of each other are merged.
pub fn brute_force_counts(c: &[i64]) -> (usize, usize) {
    let lead = c.iter().position(|&x| x != 0).expect("nonzero polynomial");
    let zero_root = lead > 0;
    let c = &c[lead..];
    let mut reals: Vec<f64> = if c.len() > 1 {
        float_roots(&c.iter().map(|&x| x as f64).collect::<Vec<_>>())
            .into_iter()
            .filter(|z| z.im.abs() <= 1e-6 * z.re.abs().max(1.0))
            .map(|z| z.re)
            .collect()
    } else {
        Vec::new()
    };
    reals.sort_by(f64::total_cmp);
    let mut distinct: Vec<f64> = Vec::new();
    for r in reals {
        match distinct.last() {
            Some(&p) if (r - p).abs() <= 1e-6 * r.abs().max(1.0) => {}
            _ => distinct.push(r),
        }
    }
    let positive = distinct.iter().filter(|&&r| r > 0.0).count();
    (distinct.len() + zero_root as usize, positive)
}

fn random_int_poly(r: &mut ChaCha8Rng) -> Vec<i64> {
    let d = r.gen_range(1..=6);
    let mut c: Vec<i64> = (0..=d).map(|_| r.gen_range(-50..=50)).collect();
    while c[d] == 0 {
        c[d] = r.gen_range(-50..=50);
    }
    c
}

/// Sturm counts against [`brute_force_counts`] on `n` random polynomials of
/// degree at most 6 with coefficients in `[-50, 50]`, on the line and on `(0, inf)`.
pub fn sturm_vs_brute_force(n: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for k in 0..n {
        let c = random_int_poly(&mut r);
        let u = UniPoly::from_ints(&c);
        let all = count_real_roots(&u, &Interval::real_line()).map_err(|e| e.to_string())?;
        let pos = count_real_roots(&u, &Interval::positive()).map_err(|e| e.to_string())?;
        let expected = brute_force_counts(&c);
        if (all, pos) != expected {
            return Err(format!("#{k} {c:?}: Sturm ({all}, {pos}), brute force {expected:?}"));
        }
    }
    Ok(())
}

fn random_cone(r: &mut ChaCha8Rng) -> RayCone {
    let dim = r.gen_range(2..=4);
    let k = r.gen_range(1..=6);
    let mut rays = Vec::with_capacity(k);
    while rays.len() < k {
        let v: Vec<i64> = (0..dim).map(|_| r.gen_range(-5..=5)).collect();
        if v.iter().any(|&x| x != 0) {
            rays.push(v.into_iter().map(int).collect());
        }
    }
    RayCone::new(dim, &rays).expect("valid rays")
}

/// `A` and `B` generate the same cone.
pub fn same_cone(a: &RayCone, b: &RayCone) -> Result<bool, String> {
    let da = dual_cone(a).map_err(|e| e.to_string())?;
    let db = dual_cone(b).map_err(|e| e.to_string())?;
    for g in b.rays_rational() {
        if !member(a, &g, &da).map_err(|e| e.to_string())? {
            return Ok(false);
        }
    }
    for g in a.rays_rational() {
        if !member(b, &g, &db).map_err(|e| e.to_string())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dual(dual(C)) = C` on `n` random cones of dimension 2 to 4 with up to 6 rays.
pub fn double_duality(n: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for k in 0..n {
        let c = random_cone(&mut r);
        let d = dual_cone(&c).map_err(|e| e.to_string())?;
        let dc = RayCone::new(c.dim(), &d.iter().map(|l| l.to_rationals()).collect::<Vec<_>>())
            .map_err(|e| e.to_string())?;
        let dd = dual_cone(&dc).map_err(|e| e.to_string())?;
        let ddc = RayCone::new(c.dim(), &dd.iter().map(|l| l.to_rationals()).collect::<Vec<_>>())
            .map_err(|e| e.to_string())?;
        if !same_cone(&c, &ddc)? {
            return Err(format!("#{k}: {} is not its own double dual", c.to_json()));
        }
    }
    Ok(())
}

pub fn random_pencil(r: &mut ChaCha8Rng, n: usize, m: usize, bound: i64) -> SymPencil<Rational> {
    let mats = (0..n)
        .map(|_| SymMatrix::from_upper(m, |_, _| int(r.gen_range(-bound..=bound))))
        .collect();
    SymPencil::new(mats).expect("uniform size")
}

/// `A(x) adj(A(x))_i = det A(x) e_i` on `n` random 3x3 pencils in 3 variables.
pub fn adjugate_identity(n: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for k in 0..n {
        let p = random_pencil(&mut r, 3, 3, 5);
        let det = p.det().map_err(|e| e.to_string())?;
        for i in 0..3 {
            let row = p.adjugate_row(i).map_err(|e| e.to_string())?;
            let lhs = p.apply(&row).map_err(|e| e.to_string())?;
            for (j, entry) in lhs.entries().iter().enumerate() {
                let want = if i == j { det.clone() } else { Poly::zero(3) };
                if entry != &want {
                    return Err(format!("#{k}: row {i}, entry {j}"));
                }
            }
        }
    }
    Ok(())
}

/// Changes one coefficient of `h4`, `q` or `f`, or one symmetric pair of a pencil
/// matrix, by a nonzero integer in `[-3, 3]`.
pub fn mutate(b: &mut VamosBundle, r: &mut ChaCha8Rng) -> String {
    let mut delta = 0;
    while delta == 0 {
        delta = r.gen_range(-3..=3i64);
    }
    let bump = |p: &Poly<Rational>, m: &Monomial| -> Poly<Rational> {
        p.checked_add(&Poly::term(int(delta), m.clone())).expect("same ring")
    };
    match r.gen_range(0..4) {
        0 => {
            let ms = Monomial::all_of_degree(4, 4);
            let m = &ms[r.gen_range(0..ms.len())];
            b.h4 = bump(&b.h4, m);
            format!("h4[{m}] += {delta}")
        }
        1 => {
            let ms = Monomial::all_of_degree(4, 5);
            let m = &ms[r.gen_range(0..ms.len())];
            b.q = bump(&b.q, m);
            format!("q[{m}] += {delta}")
        }
        2 => {
            let ms = Monomial::all_of_degree(4, 3);
            let m = &ms[r.gen_range(0..ms.len())];
            let i = r.gen_range(0..b.f.len());
            let mut entries = b.f.entries().to_vec();
            entries[i] = bump(&entries[i], m);
            b.f = hypercone::ring::PolyVec::new(entries).expect("nonempty");
            format!("f{}[{m}] += {delta}", i + 1)
        }
        _ => {
            let k = r.gen_range(0..4);
            let i = r.gen_range(0..9);
            let j = r.gen_range(0..9);
            let a = b.pencil.matrix_mut(k);
            let v = a.get(i, j) + int(delta);
            a.set(i, j, v);
            format!("A{}[{}][{}] += {delta}", k + 1, i + 1, j + 1)
        }
    }
}

/// Every one of `n` random single-entry mutations fails at least one exact step.
pub fn mutation_suite(n: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for k in 0..n {
        let mut b = builtin_vamos();
        let what = mutate(&mut b, &mut r);
        let steps = exact_steps(&b);
        if steps.iter().all(|s| s.verdict.passed()) {
            return Err(format!("mutation #{k} ({what}) passed every exact step"));
        }
    }
    Ok(())
}
