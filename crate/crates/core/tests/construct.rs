use hypercone::construct::*;
use hypercone::hyperbolic::HyperbolicInstance;
use hypercone::ring::{parse_poly, PolyVec};
use hypercone::scalar::{int, Rational};
use hypercone::{vamoslab, Error};
use num_traits::Signed;

fn quadric() -> (HyperbolicInstance, PolyVec<Rational>) {
    let h = parse_poly("x1^2 - x2^2 - x3^2", 3).unwrap();
    let inst = HyperbolicInstance::new(h, vec![int(1), int(0), int(0)]).unwrap();
    let f = PolyVec::new(vec![parse_poly("x1 + x2", 3).unwrap(), parse_poly("x3", 3).unwrap()]).unwrap();
    (inst, f)
}

fn vamos() -> (HyperbolicInstance, PolyVec<Rational>) {
    (HyperbolicInstance::new(vamoslab::h4(), vamoslab::e()).unwrap(), vamoslab::f())
}

#[test]
fn quadric_round_trip() {
    let (inst, f) = quadric();
    let sys = assemble_constraints(&inst, &f, 1).unwrap();
    let opts = SolveOptions::default();
    let sol = solve_feasibility(&sys, inst.e(), &opts).unwrap();
    assert!(sol.residual <= 1e-10);
    assert!(sol.lambda_min >= 1.0 - 1e-10);
    let exact = rationalize(&sol, &sys, inst.e(), &opts).unwrap();
    assert!(exact.pencil.eval(inst.e()).unwrap().is_positive_definite());
    let det = exact.pencil.det().unwrap();
    let c = det.exact_divide(inst.h()).unwrap();
    assert!(c.total_degree() == Some(0));
    assert!(c.coeff(&hypercone::ring::Monomial::one(3)).is_positive());
}

#[test]
fn solver_is_deterministic() {
    let (inst, f) = quadric();
    let sys = assemble_constraints(&inst, &f, 1).unwrap();
    let opts = SolveOptions { seed: 7, ..SolveOptions::default() };
    let a = solve_feasibility(&sys, inst.e(), &opts).unwrap();
    let b = solve_feasibility(&sys, inst.e(), &opts).unwrap();
    assert_eq!(a.x.iter().map(|v| v.to_bits()).collect::<Vec<_>>(), b.x.iter().map(|v| v.to_bits()).collect::<Vec<_>>());
}

#[test]
fn contradictory_system_is_reported() {
    let (inst, f) = quadric();
    let mut sys = assemble_constraints(&inst, &f, 1).unwrap();
    sys.push_equation(vec![], int(1)).unwrap();
    assert!(matches!(
        solve_feasibility(&sys, inst.e(), &SolveOptions::default()),
        Err(Error::InfeasibleAtTolerance { .. })
    ));
}

#[test]
fn exact_points_are_fixed() {
    let (inst, f) = vamos();
    let sys = assemble_constraints(&inst, &f, 3).unwrap();
    assert_eq!((sys.num_unknowns(), sys.num_equations()), (189, 315));
    let p = vamoslab::pencil();
    let g = p.apply(&f).unwrap();
    let g = PolyVec::new(g.entries().iter().map(|gi| gi.exact_divide(inst.h()).unwrap()).collect()).unwrap();
    let x = sys.unknowns_from(&p, &g).unwrap();
    assert!(sys.is_satisfied(&x).unwrap());
    let numeric = NumericSolution {
        x: x.iter().map(hypercone::scalar::rational_to_f64).collect(),
        residual: 0.0,
        lambda_min: 1.0,
        iterations: 0,
    };
    let opts = SolveOptions { denom_bound: 1, ..SolveOptions::default() };
    let out = rationalize(&numeric, &sys, inst.e(), &opts).unwrap();
    assert_eq!(out.pencil, p);
    assert_eq!(out.g, g);

    // noise of 1e-8 is removed by rounding to integers
    let noisy = NumericSolution {
        x: numeric.x.iter().enumerate().map(|(i, v)| v + 1e-8 * (((i * 7919) % 13) as f64 - 6.0) / 6.0).collect(),
        ..numeric
    };
    let out = rationalize(&noisy, &sys, inst.e(), &opts).unwrap();
    assert_eq!(out.pencil, p);
}

#[test]
fn vamos_solve_and_rationalize() {
    let (inst, f) = vamos();
    let sys = assemble_constraints(&inst, &f, 3).unwrap();
    let opts = SolveOptions::default();
    let sol = solve_feasibility(&sys, inst.e(), &opts).unwrap();
    let exact = rationalize(&sol, &sys, inst.e(), &opts).unwrap();
    assert!(exact.pencil.eval(inst.e()).unwrap().is_positive_definite());
    assert_eq!(exact.pencil.apply(&f).unwrap(), exact.g.scale_each(inst.h()).unwrap());
    let det = exact.pencil.det().unwrap();
    assert!(det.exact_divide(inst.h()).is_ok());
}

#[test]
fn quadratic_form_is_nonnegative_on_the_cone() {
    let b = vamoslab::builtin_vamos();
    let pts = hypercone::hyperbolic::sample_cone_points(
        &HyperbolicInstance::new(b.h4.clone(), b.e.clone()).unwrap(),
        10,
        2,
        hypercone::hyperbolic::SampleMode::Interior,
    )
    .unwrap();
    let mut r = hypercone::hyperbolic::sample::sample_rng(4, 0);
    for a in &pts {
        let form = quadratic_form(&b.pencil.eval(a).unwrap(), &b.f).unwrap();
        for _ in 0..20 {
            let x = hypercone::hyperbolic::sample::random_direction(4, &mut r);
            assert!(!form.evaluate(&x).unwrap().is_negative());
        }
    }
}

#[test]
fn p_interlaces_h4() {
    let b = vamoslab::builtin_vamos();
    let h = HyperbolicInstance::new(b.h4.clone(), b.e.clone()).unwrap();
    let p = HyperbolicInstance::new(b.p_poly().unwrap(), b.e.clone()).unwrap();
    assert!(hypercone::hyperbolic::check_hyperbolic_sampled(&p, 500, 0).unwrap().passed());
    let hs = [&h];
    let r = hypercone::hyperbolic::cone_inclusion_sampled(
        &hypercone::hyperbolic::Inner::Hyperbolic(&hs),
        &[hypercone::hyperbolic::Outer::Hyperbolic(&p)],
        500,
        0,
    )
    .unwrap();
    assert!(r.passed());
}

#[test]
fn sos_witness_at_e() {
    let b = vamoslab::builtin_vamos();
    let cert = sos_witness_check(&b.f, &b.pencil.eval(&b.e).unwrap()).unwrap();
    assert!(cert.verified);
    assert_eq!(cert.squares.len(), 9);
    assert!(cert.weights.iter().all(|w| w.is_positive()));
}
