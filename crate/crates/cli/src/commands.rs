use std::path::Path;
use std::process::ExitCode;

use hypercone::construct::{
    assemble_constraints, check_mixed_identity, derived_p, rationalize, solve_feasibility, SolveOptions,
};
use hypercone::hyperbolic::{check_hyperbolic_sampled, HyperbolicInstance};
use hypercone::pencil::PencilJson;
use hypercone::polycone::{dual_cone, RayConeJson};
use hypercone::ring::{PolyJson, PolyVecJson};
use hypercone::vamoslab::{verify_certificate, VerifyOptions};
use hypercone::Error;
use serde::Serialize;

use crate::{input, Cli, Command, ConstructArgs};

/// Message and exit code of a run that did not complete.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InfeasibleAtTolerance { .. } | Error::RationalizationFailed(_) | Error::NotFound(_) => 1,
            _ => 2,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_json(path: Option<&Path>, body: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        let mut s = body.to_string();
        s.push('\n');
        std::fs::write(p, s).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let json = cli.json.as_deref();
    let samples = usize::try_from(cli.samples).map_err(|_| Failure::usage("--samples is too large"))?;
    match &cli.command {
        Command::VerifyVamos { skip_support_search } => {
            let report = verify_certificate(&VerifyOptions {
                samples,
                seed: cli.seed,
                skip_support_search: *skip_support_search,
            })?;
            print!("{}", report.to_text());
            write_json(json, &report.to_json())?;
            Ok(verdict(report.passed()))
        }
        Command::Construct(args) => construct(args, cli.seed, json),
        Command::Det { pencil } => {
            let p = input::pencil(pencil)?;
            let out = to_json(&PolyJson::from(&p.det()?));
            println!("{out}");
            write_json(json, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { rays } => {
            let c = input::rays(rays)?;
            let out = to_json(&RayConeJson::from_forms(c.dim(), &dual_cone(&c)?));
            println!("{out}");
            write_json(json, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ConeMember { h, e, v } => {
            let e = input::point(e, "e")?;
            let v = input::point(v, "v")?;
            let inst = HyperbolicInstance::new(input::poly(h, e.len())?, e)?;
            let yes = inst.in_cone(&v)?;
            println!("{}", if yes { "yes" } else { "no" });
            write_json(json, &to_json(&serde_json::json!({ "member": yes })))?;
            Ok(verdict(yes))
        }
        Command::HyperbolicCheck { h, e } => {
            let e = input::point(e, "e")?;
            let inst = HyperbolicInstance::new(input::poly(h, e.len())?, e)?;
            let r = check_hyperbolic_sampled(&inst, samples, cli.seed)?;
            println!(
                "{}: {} directions, {} not real-rooted (seed {})",
                r.verdict,
                r.samples,
                r.failures.len(),
                r.seed
            );
            for f in r.failures.iter().take(5) {
                println!("  v = ({})", f.join(", "));
            }
            write_json(json, &to_json(&r))?;
            Ok(verdict(r.passed()))
        }
    }
}

#[derive(Serialize)]
struct ConstructOutput {
    seed: u64,
    iterations: usize,
    residual: f64,
    lambda_min: f64,
    denom_bound: u64,
    pencil: PencilJson,
    g: PolyVecJson,
    det: PolyJson,
    /// `det / h`, absent when `h` does not divide the determinant.
    q: Option<PolyJson>,
    /// Present when `d' = d - 1`.
    mixed_identity: Option<Vec<bool>>,
}

fn construct(args: &ConstructArgs, seed: u64, json: Option<&Path>) -> Result<ExitCode, Failure> {
    let e = input::point(&args.e, "e")?;
    let n = e.len();
    let inst = HyperbolicInstance::new(input::poly(&args.h, n)?, e)?;
    let f = input::poly_vec(&args.f, n)?;
    let sys = assemble_constraints(&inst, &f, args.d_prime)?;
    let opts = SolveOptions {
        residual_tol: args.residual_tol,
        max_iter: args.max_iter,
        denom_bound: args.denom_bound,
        seed,
        trace: args.trace.clone(),
    };
    println!(
        "{} unknowns, {} equations, m = {}",
        sys.num_unknowns(),
        sys.num_equations(),
        sys.meta().m
    );
    let sol = solve_feasibility(&sys, inst.e(), &opts).map_err(|e| {
        let mut f = Failure::from(e);
        if let Some(t) = &args.trace {
            f.message.push_str(&format!("; solver trace in {}", t.display()));
        }
        f
    })?;
    println!(
        "solver: {} iterations, residual {:.3e}, lambda_min(A(e)) {:.6}",
        sol.iterations, sol.residual, sol.lambda_min
    );
    let exact = rationalize(&sol, &sys, inst.e(), &opts)?;
    let det = exact.pencil.det()?;
    let q = det.exact_divide(inst.h()).ok();
    let mixed = if args.d_prime + 1 == inst.degree() {
        let p = derived_p(&f, &exact.g)?;
        Some(check_mixed_identity(inst.h(), &p, &f, &exact.pencil)?)
    } else {
        None
    };
    println!("exact pencil with denominators up to {}", exact.denom_bound);
    match &q {
        Some(q) => println!("det = h * ({q})"),
        None => println!("det is not divisible by h"),
    }
    if let Some(m) = &mixed {
        println!("mixed identity: {m:?}");
    }
    let pencil_json = exact.pencil.to_json();
    if let Some(out) = &args.out {
        write_json(Some(out), &pencil_json)?;
    }
    let output = ConstructOutput {
        seed,
        iterations: sol.iterations,
        residual: sol.residual,
        lambda_min: sol.lambda_min,
        denom_bound: exact.denom_bound,
        pencil: PencilJson::from(&exact.pencil),
        g: PolyVecJson::from(&exact.g),
        det: PolyJson::from(&det),
        q: q.as_ref().map(PolyJson::from),
        mixed_identity: mixed.clone(),
    };
    write_json(json, &to_json(&output))?;
    Ok(verdict(q.is_some() && mixed.is_none_or(|m| m.iter().all(|b| *b))))
}
