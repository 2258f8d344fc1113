//! Tangent-hyperplane certificates for the forms cutting out a polyhedral cone.
//!
//! A form `l` is nonnegative on `C_h(e)` when `l` is a positive multiple of
//! `grad h(v)` at a smooth boundary point `v` of `C_h(e)`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::show;
use crate::error::{Error, Result};
use crate::hyperbolic::{HyperbolicInstance, Inner, SampleMode};
use crate::polycone::LinForm;
use crate::realroot::float_extreme_root;
use crate::ring::Poly;
use crate::scalar::{best_rational, f64_to_rational, Rational, Scalar};

/// Tolerance for [`SupportOutcome::NumericPass`] in [`support_search`].
pub const SEARCH_TOL: f64 = 1e-8;

/// Candidate tangency point with `grad h(v) = lambda * l`.
#[derive(Debug, Clone, PartialEq)]
pub enum Tangency {
    Exact { v: Vec<Rational>, lambda: Rational },
    Numeric { v: Vec<f64>, lambda: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupportCertificate {
    pub form: LinForm,
    pub h: Poly<Rational>,
    pub tangency: Tangency,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum SupportOutcome {
    ExactPass,
    /// `[|h(v)|, gradient direction mismatch, largest root of h(t e + v)]`, all relative.
    NumericPass { residuals: Vec<f64> },
    Fail { reason: String },
}

impl SupportOutcome {
    pub fn passed(&self) -> bool {
        !matches!(self, SupportOutcome::Fail { .. })
    }

    fn fail(reason: impl Into<String>) -> Self {
        SupportOutcome::Fail { reason: reason.into() }
    }
}

/// Checks `h(v) = 0`, `grad h(v) = lambda l` with `lambda > 0`, `grad h(v) != 0`,
/// `v` in the closed cone and `l(e) > 0`.
pub fn support_certificate(cert: &SupportCertificate, e: &[Rational], tol: f64) -> Result<SupportOutcome> {
    let n = cert.h.nvars();
    if cert.form.dim() != n || e.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: cert.form.dim().min(e.len()),
        });
    }
    if cert.form.is_zero() {
        return Err(Error::InvalidInput("zero form".into()));
    }
    if !cert.form.eval(e)?.is_positive() {
        return Ok(SupportOutcome::fail("l(e) is not positive"));
    }
    let inst = HyperbolicInstance::new(cert.h.clone(), e.to_vec())?;
    match &cert.tangency {
        Tangency::Exact { v, lambda } => {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
            let grad: Vec<Rational> = cert
                .h
                .gradient()
                .iter()
                .map(|g| g.evaluate(v))
                .collect::<Result<_>>()?;
            if grad.iter().all(Zero::is_zero) {
                return Ok(SupportOutcome::fail("gradient vanishes: not a smooth point"));
            }
            if !cert.h.evaluate(v)?.is_zero() {
                return Ok(SupportOutcome::fail("h(v) is not zero"));
            }
            if !lambda.is_positive() {
                return Ok(SupportOutcome::fail("lambda is not positive"));
            }
            let l = cert.form.to_rationals();
            if grad.iter().zip(&l).any(|(g, li)| g != &(lambda * li)) {
                return Ok(SupportOutcome::fail("gradient is not lambda * l"));
            }
            if !inst.in_cone(v)? {
                return Ok(SupportOutcome::fail("v is outside the hyperbolicity cone"));
            }
            Ok(SupportOutcome::ExactPass)
        }
        Tangency::Numeric { v, lambda } => {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
            let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            if scale == 0.0 || !scale.is_finite() {
                return Ok(SupportOutcome::fail("gradient vanishes: not a smooth point"));
            }
            let vn: Vec<f64> = v.iter().map(|x| x / scale).collect();
            let hf = cert.h.to_f64();
            let grad: Vec<f64> = hf
                .gradient()
                .iter()
                .map(|g| g.evaluate(&vn))
                .collect::<Result<_>>()?;
            let gnorm = norm(&grad);
            if gnorm <= tol {
                return Ok(SupportOutcome::fail("gradient vanishes: not a smooth point"));
            }
            if *lambda <= 0.0 {
                return Ok(SupportOutcome::fail("lambda is not positive"));
            }
            let lf: Vec<f64> = cert.form.to_rationals().iter().map(Scalar::to_f64).collect();
            let lnorm = norm(&lf);
            let r_h = hf.evaluate(&vn)?.abs() / gnorm;
            let r_g = norm(&grad.iter().zip(&lf).map(|(g, l)| g / gnorm - l / lnorm).collect::<Vec<_>>());
            let vq = vn.iter().map(|&x| f64_to_rational(x)).collect::<Result<Vec<_>>>()?;
            let r_c = float_extreme_root(&inst.restrict(&vq)?, true).unwrap_or(0.0).max(0.0);
            let residuals = vec![r_h, r_g, r_c];
            if residuals.iter().all(|r| *r <= tol) {
                Ok(SupportOutcome::NumericPass { residuals })
            } else {
                Ok(SupportOutcome::fail(format!(
                    "residuals {r_h:.3e}, {r_g:.3e}, {r_c:.3e} exceed {tol:e}"
                )))
            }
        }
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Derivatives of `h` up to order two, in floating point.
struct Jet {
    h: Poly<f64>,
    grad: Vec<Poly<f64>>,
    hess: Vec<Vec<Poly<f64>>>,
}

impl Jet {
    fn new(h: &Poly<Rational>) -> Result<Self> {
        let hf = h.to_f64();
        let grad = hf.gradient();
        let hess = grad.iter().map(|g| g.gradient()).collect();
        Ok(Jet { h: hf, grad, hess })
    }

    /// Residual `(grad h(v) - l, h(v))` and its Jacobian.
    fn system(&self, v: &[f64], l: &[f64]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
        let n = v.len();
        let mut r = Vec::with_capacity(n + 1);
        let mut jac = Vec::with_capacity(n + 1);
        for i in 0..n {
            r.push(self.grad[i].evaluate(v)? - l[i]);
            jac.push(self.hess[i].iter().map(|p| p.evaluate(v)).collect::<Result<Vec<_>>>()?);
        }
        r.push(self.h.evaluate(v)?);
        jac.push(self.grad.iter().map(|p| p.evaluate(v)).collect::<Result<Vec<_>>>()?);
        Ok((r, jac))
    }
}

/// Levenberg-Marquardt on `grad h(v) = l, h(v) = 0` (the scale of `v` fixes `lambda = 1`).
fn levenberg_marquardt(jet: &Jet, l: &[f64], mut v: Vec<f64>, iters: usize) -> Result<Option<Vec<f64>>> {
    let n = v.len();
    let mut mu = 1e-3;
    let (mut r, mut jac) = jet.system(&v, l)?;
    let mut cost = norm(&r);
    for _ in 0..iters {
        if cost <= 1e-13 * norm(l) {
            return Ok(Some(v));
        }
        // (J^T J + mu I) d = -J^T r
        let mut a = vec![vec![0.0; n]; n];
        let mut b = vec![0.0; n];
        for (row, ri) in jac.iter().zip(&r) {
            for i in 0..n {
                b[i] -= row[i] * ri;
                for j in 0..n {
                    a[i][j] += row[i] * row[j];
                }
            }
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[i] += mu * (1.0 + row[i]);
        }
        let Some(d) = solve_dense(a, b) else { return Ok(None) };
        let trial: Vec<f64> = v.iter().zip(&d).map(|(x, y)| x + y).collect();
        let (rt, jt) = jet.system(&trial, l)?;
        let ct = norm(&rt);
        if ct.is_finite() && ct < cost {
            v = trial;
            r = rt;
            jac = jt;
            cost = ct;
            mu = (mu / 3.0).max(1e-15);
        } else {
            mu *= 4.0;
            if mu > 1e12 {
                return Ok(None);
            }
        }
    }
    Ok((cost <= 1e-10 * norm(l)).then_some(v))
}

fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c].abs() < 1e-300 {
            return None;
        }
        a.swap(c, p);
        b.swap(c, p);
        for i in (c + 1)..n {
            let f = a[i][c] / a[c][c];
            for k in c..n {
                a[i][k] -= f * a[c][k];
            }
            b[i] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = ((i + 1)..n).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    Some(x)
}

/// Boundary samples of `C_h(e)` examined per candidate.
pub const SEARCH_SAMPLES: usize = 64;
/// Newton starts per candidate: the samples where `l` is smallest.
pub const SEARCH_STARTS: usize = 8;

/// Searches the candidates in order for a tangency point of `l`; the first
/// certificate passing [`support_certificate`] at [`SEARCH_TOL`] is returned,
/// upgraded to an exact one when a nearby small-denominator point checks exactly.
pub fn support_search(
    l: &LinForm,
    candidates: &[Poly<Rational>],
    e: &[Rational],
    seed: u64,
) -> Result<SupportCertificate> {
    if l.is_zero() {
        return Err(Error::InvalidInput("zero form".into()));
    }
    let lq = l.to_rationals();
    let lmax = lq.iter().map(|x| x.abs()).max().expect("nonempty form");
    let lf: Vec<f64> = lq.iter().map(|x| (x / &lmax).to_f64()).collect();
    for h in candidates {
        let inst = match HyperbolicInstance::new(h.clone(), e.to_vec()) {
            Ok(i) => i,
            Err(_) => continue,
        };
        let d = inst.degree();
        if d < 2 {
            continue;
        }
        let jet = Jet::new(h)?;
        let hs = [&inst];
        let inner = Inner::Hyperbolic(&hs);
        let mut starts: Vec<(f64, Vec<f64>)> = Vec::with_capacity(SEARCH_SAMPLES);
        for i in 0..SEARCH_SAMPLES {
            let Ok(v) = inner.point(seed, i as u64, SampleMode::NearBoundary) else { continue };
            let vf: Vec<f64> = v.iter().map(Scalar::to_f64).collect();
            let s = vf.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            if s == 0.0 {
                continue;
            }
            let vf: Vec<f64> = vf.iter().map(|x| x / s).collect();
            let lv: f64 = vf.iter().zip(&lf).map(|(a, b)| a * b).sum();
            starts.push((lv, vf));
        }
        starts.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (_, v0) in starts.into_iter().take(SEARCH_STARTS) {
            // rescale so that |grad h(v0)| matches |l|
            let g0: Vec<f64> = jet.grad.iter().map(|g| g.evaluate(&v0)).collect::<Result<_>>()?;
            let gn = norm(&g0);
            if gn == 0.0 {
                continue;
            }
            let s = (norm(&lf) / gn).powf(1.0 / (d - 1) as f64);
            let v0: Vec<f64> = v0.iter().map(|x| x * s).collect();
            let Some(v) = levenberg_marquardt(&jet, &lf, v0, 200)? else { continue };
            if let Some(c) = exact_upgrade(l, h, &v, e)? {
                return Ok(c);
            }
            let cert = SupportCertificate {
                form: l.clone(),
                h: h.clone(),
                tangency: Tangency::Numeric {
                    v,
                    lambda: 1.0 / lmax.to_f64(),
                },
            };
            if support_certificate(&cert, e, SEARCH_TOL)?.passed() {
                return Ok(cert);
            }
        }
    }
    Err(Error::NotFound(format!("no tangency point for {l}")))
}

/// A small-denominator rational point near `v` at which the tangency holds exactly.
fn exact_upgrade(l: &LinForm, h: &Poly<Rational>, v: &[f64], e: &[Rational]) -> Result<Option<SupportCertificate>> {
    let s = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    for den in [1u64, 12, 1000, 1_000_000] {
        let Some(vq) = v
            .iter()
            .map(|x| best_rational(x / s, den, 1e-9))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let grad: Vec<Rational> = h.gradient().iter().map(|g| g.evaluate(&vq)).collect::<Result<_>>()?;
        let lq = l.to_rationals();
        let Some(k) = lq.iter().position(|x| !x.is_zero()) else { return Ok(None) };
        let lambda = &grad[k] / &lq[k];
        let cert = SupportCertificate {
            form: l.clone(),
            h: h.clone(),
            tangency: Tangency::Exact { v: vq, lambda },
        };
        if support_certificate(&cert, e, SEARCH_TOL)? == SupportOutcome::ExactPass {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

impl SupportCertificate {
    /// One-line description of the tangency point.
    pub fn describe(&self) -> String {
        match &self.tangency {
            Tangency::Exact { v, lambda } => format!(
                "exact v = ({}), lambda = {}",
                v.iter().map(show).collect::<Vec<_>>().join(", "),
                show(lambda)
            ),
            Tangency::Numeric { v, lambda } => format!(
                "numeric v = ({}), lambda = {lambda:.6e}",
                v.iter().map(|x| format!("{x:.10}")).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}
