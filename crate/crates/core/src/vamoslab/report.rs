//! The verification pipeline over a [`VamosBundle`] and its report.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::support::{support_search, Tangency};
use super::{data, show, VamosBundle};
use crate::construct::check_mixed_identity;
use crate::error::{Error, Result};
use crate::hyperbolic::{
    check_hyperbolic_sampled, cone_inclusion_sampled, HyperbolicInstance, Inner, Outer, SampleMode, SampleReport,
    Verdict,
};
use crate::polycone::{dual_cone, LinForm};
use crate::realroot::{nonneg_coeff_shortcut, Shortcut};
use crate::ring::{Poly, PolyVec};
use crate::scalar::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    Exact,
    Sampled,
    BestEffort,
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Level::Exact => "exact",
            Level::Sampled => "sampled",
            Level::BestEffort => "best-effort",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Step {
    pub index: usize,
    pub name: String,
    pub level: Level,
    pub mandatory: bool,
    pub verdict: Verdict,
    pub evidence: Vec<String>,
    /// Wall time; left out of the JSON so that reruns are byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertReport {
    pub samples: usize,
    pub seed: u64,
    pub steps: Vec<Step>,
    pub overall: Verdict,
}

impl CertReport {
    fn new(samples: usize, seed: u64, steps: Vec<Step>) -> Self {
        let overall = Verdict::from_bool(steps.iter().filter(|s| s.mandatory).all(|s| s.verdict.passed()));
        CertReport {
            samples,
            seed,
            steps,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall.passed()
    }

    pub fn step(&self, index: usize) -> Option<&Step> {
        self.steps.iter().find(|s| s.index == index)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("samples {}, seed {}\n", self.samples, self.seed);
        for s in &self.steps {
            out.push_str(&format!(
                "[{:>2}] {:<4} {:<28} {:<11} {:>9.3}s{}\n",
                s.index,
                s.verdict,
                s.name,
                s.level,
                s.elapsed.as_secs_f64(),
                if s.mandatory { "" } else { "  (optional)" }
            ));
            for line in &s.evidence {
                out.push_str(&format!("       {line}\n"));
            }
        }
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub skip_support_search: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 10_000,
            seed: 0,
            skip_support_search: false,
        }
    }
}

type Outcome = Result<(bool, Vec<String>)>;

fn run(index: usize, name: &str, level: Level, mandatory: bool, body: impl FnOnce() -> Outcome) -> Step {
    let start = Instant::now();
    let (ok, evidence) = match body() {
        Ok(x) => x,
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    Step {
        index,
        name: name.to_string(),
        level,
        mandatory,
        verdict: Verdict::from_bool(ok),
        evidence,
        elapsed: start.elapsed(),
    }
}

fn describe_poly(p: &Poly<Rational>) -> String {
    let s = p.to_string();
    if s.len() <= 160 {
        s
    } else {
        format!("{} terms, leading {}...", p.len(), &s[..s.char_indices().nth(120).map_or(s.len(), |c| c.0)])
    }
}

fn sampled_evidence(what: &str, r: &SampleReport) -> Vec<String> {
    let mut out = vec![format!("{what}: {} samples, {} failures", r.samples, r.failures.len())];
    for p in r.failures.iter().take(3) {
        out.push(format!("  witness ({})", p.join(", ")));
    }
    out
}

fn step_det(b: &VamosBundle) -> Outcome {
    let det = b.pencil.det()?;
    let rhs = b.q.checked_mul(&b.h4)?.scale(&int(data::DET_FACTOR));
    let residual = det.checked_sub(&rhs)?;
    if residual.is_zero() {
        Ok((true, vec![format!("det A(x) - {}*q*h4 = 0 ({} terms)", data::DET_FACTOR, det.len())]))
    } else {
        Ok((false, vec![format!("nonzero residual: {}", describe_poly(&residual))]))
    }
}

fn step_eigen(b: &VamosBundle) -> Outcome {
    let (i, j) = (0, 1);
    let m = b.pencil.matrix(i).add(b.pencil.matrix(j))?;
    let tau = super::eigen_threshold();
    let ok = m.eigen_lower_bound(&tau)?;
    Ok((
        ok,
        vec![format!(
            "Sturm count of eigenvalues of A1 + A2 at most {}: {}",
            show(&tau),
            if ok { "0" } else { "nonzero" }
        )],
    ))
}

/// `A(x) f / h4`, entry by entry, when every quotient is a constant.
fn recover_g(b: &VamosBundle) -> Result<Vec<Rational>> {
    let af = b.pencil.apply(&b.f)?;
    af.entries()
        .iter()
        .map(|p| {
            let c = p.exact_divide(&b.h4)?;
            match c.total_degree() {
                None => Ok(int(0)),
                Some(0) => Ok(c.terms().next().map(|(_, v)| v.clone()).unwrap_or_else(|| int(0))),
                Some(_) => Err(Error::NonConstantCofactor),
            }
        })
        .collect()
}

fn step_cofactor(b: &VamosBundle) -> Outcome {
    let g = recover_g(b)?;
    let shown = g.iter().map(show).collect::<Vec<_>>().join(", ");
    if g != b.g {
        return Ok((false, vec![format!("g = ({shown}) differs from the recorded cofactor")]));
    }
    Ok((true, vec![format!("A(x) f = h4 g with g = ({shown})")]))
}

fn derived_p(b: &VamosBundle) -> Result<Poly<Rational>> {
    b.f.dot_scalars(&b.g)
}

fn step_mixed(b: &VamosBundle) -> Outcome {
    let p = derived_p(b)?;
    let ok = check_mixed_identity(&b.h4, &p, &b.f, &b.pencil)?;
    let failed: Vec<String> = ok
        .iter()
        .enumerate()
        .filter(|(_, v)| !**v)
        .map(|(i, _)| (i + 1).to_string())
        .collect();
    if failed.is_empty() {
        Ok((true, vec![format!("identity holds for i = 1..{}", ok.len())]))
    } else {
        Ok((false, vec![format!("identity fails for i = {}", failed.join(", "))]))
    }
}

fn step_generators(b: &VamosBundle) -> Outcome {
    let mut bad = Vec::new();
    for (k, w) in b.p.rays_rational().iter().enumerate() {
        let u = b.q.restrict_to_line(&b.e, w)?;
        if nonneg_coeff_shortcut(&u)? != Shortcut::True {
            bad.push((k + 1).to_string());
        }
    }
    if bad.is_empty() {
        Ok((true, vec![format!("q(te + w) has nonnegative coefficients for all {} generators", b.p.len())]))
    } else {
        Ok((false, vec![format!("inconclusive for generators {}", bad.join(", "))]))
    }
}

/// Steps 1 to 5: the exact identities.
pub fn exact_steps(b: &VamosBundle) -> Vec<Step> {
    vec![
        run(1, "det-identity", Level::Exact, true, || step_det(b)),
        run(2, "eigenvalue-margin", Level::Exact, true, || step_eigen(b)),
        run(3, "cofactor", Level::Exact, true, || step_cofactor(b)),
        run(4, "mixed-identity", Level::Exact, true, || step_mixed(b)),
        run(5, "generators-in-q-cone", Level::Exact, true, || step_generators(b)),
    ]
}

/// Runs the pipeline on the built-in data.
pub fn verify_certificate(opts: &VerifyOptions) -> Result<CertReport> {
    verify_bundle(&super::builtin_vamos(), opts)
}

/// Runs every step, in order, whatever the earlier outcomes.
pub fn verify_bundle(b: &VamosBundle, opts: &VerifyOptions) -> Result<CertReport> {
    if opts.samples == 0 {
        return Err(Error::InvalidInput("sample count must be at least 1".into()));
    }
    let (n, seed) = (opts.samples, opts.seed);
    let mut steps = exact_steps(b);

    let h4 = HyperbolicInstance::new(b.h4.clone(), b.e.clone());
    let q = HyperbolicInstance::new(b.q.clone(), b.e.clone());
    let need = |r: &Result<HyperbolicInstance>| -> Result<HyperbolicInstance> { r.clone() };

    steps.push(run(6, "hyperbolicity", Level::Sampled, true, || {
        let rq = check_hyperbolic_sampled(&need(&q)?, n, seed)?;
        let rh = check_hyperbolic_sampled(&need(&h4)?, n, seed)?;
        let mut ev = sampled_evidence("q", &rq);
        ev.extend(sampled_evidence("h4", &rh));
        Ok((rq.passed() && rh.passed(), ev))
    }));

    let mut dual: Option<Vec<LinForm>> = None;
    steps.push(run(7, "dual-of-P", Level::Exact, true, || {
        let d = dual_cone(&b.p)?;
        let nonneg = d
            .iter()
            .all(|l| b.p.rays().iter().all(|r| !num_traits::Signed::is_negative(&l.eval_int(r))));
        let mut ev = vec![format!("{} facet forms", d.len())];
        ev.extend(d.iter().map(|l| format!("  {l}")));
        dual = Some(d);
        Ok((nonneg, ev))
    }));

    steps.push(run(8, "h4-cone-in-P", Level::Sampled, true, || {
        let d = dual.as_ref().ok_or_else(|| Error::InvalidInput("no dual description (step 7)".into()))?;
        let h = need(&h4)?;
        let hs = [&h];
        let r = cone_inclusion_sampled(&Inner::Hyperbolic(&hs), &[Outer::Polyhedral(d)], n, seed)?;
        Ok((r.passed(), sampled_evidence("C(h4) against P", &r)))
    }));

    steps.push(run(9, "spectrahedron-agreement", Level::Sampled, true, || {
        let (h, qq) = (need(&h4)?, need(&q)?);
        let a = cone_inclusion_sampled(
            &Inner::Spectrahedron(&b.pencil, &b.e),
            &[Outer::Hyperbolic(&h), Outer::Hyperbolic(&qq)],
            n,
            seed,
        )?;
        let hs = [&h, &qq];
        let c = cone_inclusion_sampled(&Inner::Hyperbolic(&hs), &[Outer::Spectrahedron(&b.pencil)], n, seed)?;
        let mut ev = sampled_evidence("{A(v) >= 0} against C(h4) and C(q)", &a);
        ev.extend(sampled_evidence("C(h4) and C(q) against {A(v) >= 0}", &c));
        Ok((a.passed() && c.passed(), ev))
    }));

    if !opts.skip_support_search {
        steps.push(run(10, "support-search", Level::BestEffort, false, || {
            let d = dual.as_ref().ok_or_else(|| Error::InvalidInput("no dual description (step 7)".into()))?;
            let cands = support_candidates(b, seed)?;
            let mut ok = true;
            let mut ev = Vec::new();
            for l in d {
                match support_search(l, &cands.iter().map(|c| c.1.clone()).collect::<Vec<_>>(), &b.e, seed) {
                    Ok(cert) => {
                        let name = cands.iter().find(|c| c.1 == cert.h).map_or("?", |c| c.0.as_str());
                        let kind = match cert.tangency {
                            Tangency::Exact { .. } => "exact",
                            Tangency::Numeric { .. } => "numeric",
                        };
                        ev.push(format!("{l}: {kind} tangency on {name}, {}", cert.describe()));
                    }
                    Err(Error::NotFound(_)) => {
                        ok = false;
                        ev.push(format!("{l}: not found (not a refutation)"));
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok((ok, ev))
        }));
    }
    Ok(CertReport::new(n, seed, steps))
}

/// `h4`, `p = g^T f` and directional derivatives of `h4` along `e` and two sampled cone points.
pub fn support_candidates(b: &VamosBundle, seed: u64) -> Result<Vec<(String, Poly<Rational>)>> {
    let mut out = vec![("h4".to_string(), b.h4.clone())];
    out.push(("p".to_string(), derived_p(b)?));
    out.push(("D_e h4".to_string(), b.h4.directional_derivative(&b.e)?));
    let inst = HyperbolicInstance::new(b.h4.clone(), b.e.clone())?;
    let hs = [&inst];
    for i in 0..2 {
        let a = Inner::Hyperbolic(&hs).point(seed, i, SampleMode::Interior)?;
        out.push((format!("D_a{} h4", i + 1), b.h4.directional_derivative(&a)?));
    }
    Ok(out)
}

impl VamosBundle {
    /// `g^T f`.
    pub fn p_poly(&self) -> Result<Poly<Rational>> {
        derived_p(self)
    }

    /// `A(x) f`.
    pub fn pencil_times_f(&self) -> Result<PolyVec<Rational>> {
        self.pencil.apply(&self.f)
    }
}
