//! Hyperbolicity tests and hyperbolicity-cone membership and sampling.

pub mod sample;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parallel::par_map;
use crate::pencil::{numeric, SymPencil};
use crate::polycone::LinForm;
use crate::realroot::{
    float_extreme_root, is_real_rooted, isolate_roots, largest_root_upper_real_rooted,
    no_positive_root, roots_at_most, RootInterval, UniPoly,
};
use crate::ring::{Homogeneity, Poly};
use crate::scalar::{f64_to_rational, point_to_strings, round_to_grid, Rational};
use sample::{random_unit_direction, sample_rng, shift};

/// Bisection depth for root bounds: `mu` is within `2^-20` of the largest root.
pub const ROOT_BITS: u32 = 20;

/// A homogeneous polynomial `h` together with a direction `e` where it does not vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicInstance {
    h: Poly<Rational>,
    e: Vec<Rational>,
    degree: u32,
}

impl HyperbolicInstance {
    pub fn new(h: Poly<Rational>, e: Vec<Rational>) -> Result<Self> {
        if e.len() != h.nvars() {
            return Err(Error::DimensionMismatch {
                expected: h.nvars(),
                got: e.len(),
            });
        }
        let degree = match h.homogeneity() {
            Homogeneity::Degree(d) => d,
            Homogeneity::Zero => return Err(Error::ZeroPolynomial),
            Homogeneity::NotHomogeneous => return Err(Error::NotHomogeneous),
        };
        if h.evaluate(&e)?.is_zero() {
            return Err(Error::VanishesAtDirection);
        }
        Ok(HyperbolicInstance { h, e, degree })
    }

    pub fn h(&self) -> &Poly<Rational> {
        &self.h
    }

    pub fn e(&self) -> &[Rational] {
        &self.e
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.e.len()
    }

    /// `h(t e + v)`; never the zero polynomial since its `t^d` coefficient is `h(e)`.
    pub fn restrict(&self, v: &[Rational]) -> Result<UniPoly> {
        self.h.restrict_to_line(&self.e, v)
    }

    /// `v` lies in the closed hyperbolicity cone: `h(t e + v)` has no root `t > 0`.
    pub fn in_cone(&self, v: &[Rational]) -> Result<bool> {
        let u = self.restrict(v)?;
        if roots_at_most(&u, &Rational::zero()) {
            return Ok(true);
        }
        no_positive_root(&u)
    }

    /// Isolating intervals (width `<= 2^-20`) for the roots of `h(t e + v)`.
    pub fn eigenvalues_along(&self, v: &[Rational]) -> Result<Vec<RootInterval>> {
        let u = self.restrict(v)?;
        if !is_real_rooted(&u)? {
            return Err(Error::NotRealRooted);
        }
        isolate_roots(&u, ROOT_BITS)
    }

    /// `w + mu e` with `mu` an upper bound within `2^-20` of the largest root of `h(t e + w)`.
    pub fn boundary_shift(&self, w: &[Rational]) -> Result<Vec<Rational>> {
        let u = self.restrict(w)?;
        if !is_real_rooted(&u)? {
            return Err(Error::NotRealRooted);
        }
        let mu = largest_root_upper_real_rooted(&u, ROOT_BITS)?.unwrap_or_else(Rational::zero);
        Ok(shift(w, &mu, &self.e))
    }

    /// Certified largest-root bound and float root spread of `h(t e + w)`, without a
    /// real-rootedness check.
    fn shift_data(&self, w: &[Rational]) -> Result<(Rational, f64)> {
        let u = self.restrict(w)?;
        let Some(hi) = largest_root_upper_real_rooted(&u, ROOT_BITS)? else {
            return Ok((Rational::zero(), 0.0));
        };
        let spread = match (float_extreme_root(&u, true), float_extreme_root(&u, false)) {
            (Some(a), Some(b)) if a.is_finite() && b.is_finite() => (a - b).max(0.0),
            _ => 0.0,
        };
        Ok((hi, spread))
    }
}

pub fn in_cone(h: &HyperbolicInstance, v: &[Rational]) -> Result<bool> {
    h.in_cone(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Outcome of a sampled check. `failures` lists the offending points as `"num/den"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub verdict: Verdict,
    pub samples: usize,
    pub seed: u64,
    pub failures: Vec<Vec<String>>,
}

impl SampleReport {
    fn from_failures(samples: usize, seed: u64, failures: Vec<Vec<Rational>>) -> Self {
        SampleReport {
            verdict: Verdict::from_bool(failures.is_empty()),
            samples,
            seed,
            failures: failures.iter().map(|p| point_to_strings(p)).collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

/// Exact real-rootedness of `h(t e + v)` along `samples` random directions.
pub fn check_hyperbolic_sampled(h: &HyperbolicInstance, samples: usize, seed: u64) -> Result<SampleReport> {
    if samples == 0 {
        return Err(Error::InvalidInput("sample count must be at least 1".into()));
    }
    let results = par_map(samples, |i| -> Result<Option<Vec<Rational>>> {
        let mut rng = sample_rng(seed, i as u64);
        let v = sample::random_direction(h.nvars(), &mut rng);
        Ok(if is_real_rooted(&h.restrict(&v)?)? { None } else { Some(v) })
    });
    let failures = results.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    Ok(SampleReport::from_failures(samples, seed, failures))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleMode {
    Interior,
    NearBoundary,
}

/// A cone to draw points from.
#[derive(Debug, Clone, Copy)]
pub enum Inner<'a> {
    /// Intersection of hyperbolicity cones sharing one direction `e`.
    Hyperbolic(&'a [&'a HyperbolicInstance]),
    /// `{v : A(v) >= 0}`, sampled along `e` with `A(e)` positive definite.
    Spectrahedron(&'a SymPencil<Rational>, &'a [Rational]),
}

/// A cone to test points against, exactly.
#[derive(Debug, Clone, Copy)]
pub enum Outer<'a> {
    Hyperbolic(&'a HyperbolicInstance),
    /// Intersection of halfspaces `l >= 0`.
    Polyhedral(&'a [LinForm]),
    Spectrahedron(&'a SymPencil<Rational>),
}

impl Outer<'_> {
    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        match self {
            Outer::Hyperbolic(h) => h.in_cone(v),
            Outer::Polyhedral(forms) => {
                for l in forms.iter() {
                    if l.eval(v)?.is_negative() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Outer::Spectrahedron(p) => Ok(p.eval(v)?.is_psd_exact()),
        }
    }
}

impl Inner<'_> {
    fn nvars(&self) -> usize {
        match self {
            Inner::Hyperbolic(hs) => hs[0].nvars(),
            Inner::Spectrahedron(p, _) => p.nvars(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Inner::Hyperbolic(hs) => {
                let Some(first) = hs.first() else {
                    return Err(Error::InvalidInput("no cone to sample".into()));
                };
                if hs.iter().any(|h| h.e() != first.e()) {
                    return Err(Error::InvalidInput("cones must share the direction e".into()));
                }
                Ok(())
            }
            Inner::Spectrahedron(p, e) => {
                if !p.eval(e)?.is_positive_definite() {
                    return Err(Error::NotPositiveDefinite);
                }
                Ok(())
            }
        }
    }

    /// Sample `index` of the run, exactly inside the cone.
    pub fn point(&self, seed: u64, index: u64, mode: SampleMode) -> Result<Vec<Rational>> {
        let mut rng = sample_rng(seed, index);
        let w = random_unit_direction(self.nvars(), &mut rng);
        match self {
            Inner::Hyperbolic(hs) => {
                let mut mu: Option<Rational> = None;
                let mut spread = 0.0f64;
                for h in hs.iter() {
                    let (m, s) = h.shift_data(&w)?;
                    mu = Some(match mu {
                        Some(x) if x >= m => x,
                        _ => m,
                    });
                    spread = spread.max(s);
                }
                let mut mu = mu.expect("at least one cone");
                if mode == SampleMode::Interior {
                    let push = if spread > 0.0 { spread / 16.0 } else { 1.0 / 16.0 };
                    let grid = 1u64 << ROOT_BITS;
                    mu += round_to_grid(push, grid)
                        .filter(|x| x.is_positive())
                        .unwrap_or_else(|| Rational::new(1.into(), grid.into()));
                }
                Ok(shift(&w, &mu, hs[0].e()))
            }
            Inner::Spectrahedron(p, e) => spectrahedron_point(p, e, &w, mode),
        }
    }
}

/// `w + mu e` with `A(w + mu e)` exactly positive semidefinite and `mu` close to minimal
/// (near-boundary) or pushed in by a sixteenth of the generalized spectrum's spread.
fn spectrahedron_point(
    p: &SymPencil<Rational>,
    e: &[Rational],
    w: &[Rational],
    mode: SampleMode,
) -> Result<Vec<Rational>> {
    let ae = p.eval(e)?.to_f64();
    let aw = p.eval(w)?.to_f64();
    let ev = numeric::generalized_eigenvalues(&ae, &aw)?;
    let (lo, hi) = (ev[0], *ev.last().expect("m >= 1"));
    let mut mu = -lo;
    if mode == SampleMode::Interior {
        mu += ((hi - lo) / 16.0).max(1.0 / 16.0);
    }
    let mut margin = 1e-9;
    for _ in 0..60 {
        let grid = 1u64 << 40;
        let m = f64_to_rational(((mu + margin) * grid as f64).ceil())? / Rational::from_integer(grid.into());
        let v = shift(w, &m, e);
        if p.eval(&v)?.is_psd_exact() {
            return Ok(v);
        }
        margin *= 4.0;
    }
    Err(Error::InvalidInput("could not place a sample inside the spectrahedron".into()))
}

/// `n` points of the cone, re-checked exactly.
pub fn sample_cone_points(
    h: &HyperbolicInstance,
    n: usize,
    seed: u64,
    mode: SampleMode,
) -> Result<Vec<Vec<Rational>>> {
    let hs = [h];
    let inner = Inner::Hyperbolic(&hs);
    let pts = par_map(n, |i| inner.point(seed, i as u64, mode))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    for v in &pts {
        if !h.in_cone(v)? {
            return Err(Error::InvalidInput("sampled point left the cone".into()));
        }
    }
    Ok(pts)
}

/// Samples `n` points of `inner` (even indices near the boundary, odd ones interior)
/// and tests each against every cone in `outers`.
pub fn cone_inclusion_sampled(inner: &Inner, outers: &[Outer], n: usize, seed: u64) -> Result<SampleReport> {
    inner.validate()?;
    let results = par_map(n, |i| -> Result<Option<Vec<Rational>>> {
        let mode = if i % 2 == 0 {
            SampleMode::NearBoundary
        } else {
            SampleMode::Interior
        };
        let v = inner.point(seed, i as u64, mode)?;
        for o in outers {
            if !o.contains(&v)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    });
    let failures = results.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    Ok(SampleReport::from_failures(n, seed, failures))
}
