use hypercone::hyperbolic::sample::{random_direction, sample_rng};
use hypercone::hyperbolic::{check_hyperbolic_sampled, sample_cone_points, HyperbolicInstance, SampleMode};
use hypercone::ring::parse_poly;
use hypercone::scalar::{int, ratio, rational_to_f64, Rational};
use hypercone::{vamoslab, Error};
use proptest::prelude::*;

fn h4() -> HyperbolicInstance {
    HyperbolicInstance::new(vamoslab::h4(), vamoslab::e()).unwrap()
}

fn direction() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-12i64..=12, 1i64..=5).prop_map(|(a, b)| ratio(a, b)), 4)
}

#[test]
fn e_and_the_origin() {
    let h = h4();
    assert!(h.in_cone(&vamoslab::e()).unwrap());
    assert!(h.in_cone(&vec![int(0); 4]).unwrap());
    assert!(!h.in_cone(&vamoslab::e().iter().map(|x| -x).collect::<Vec<_>>()).unwrap());
    let q = HyperbolicInstance::new(vamoslab::q(), vamoslab::e()).unwrap();
    for r in vamoslab::generators() {
        assert!(q.in_cone(&r).unwrap(), "generator {r:?}");
    }
    // P is strictly wider than C(h4)
    assert!(vamoslab::generators().iter().any(|r| !h.in_cone(r).unwrap()));
}

#[test]
fn quadrics() {
    let e = vec![int(1), int(0), int(0)];
    let sum = HyperbolicInstance::new(parse_poly("x1^2 + x2^2", 3).unwrap(), e.clone()).unwrap();
    assert!(!check_hyperbolic_sampled(&sum, 200, 0).unwrap().passed());
    let prod = HyperbolicInstance::new(parse_poly("x1 x2", 3).unwrap(), vec![int(1), int(1), int(0)]).unwrap();
    assert!(check_hyperbolic_sampled(&prod, 200, 0).unwrap().passed());
    let lorentz = HyperbolicInstance::new(parse_poly("x1^2 - x2^2 - x3^2", 3).unwrap(), e).unwrap();
    assert!(check_hyperbolic_sampled(&lorentz, 200, 0).unwrap().passed());
    assert!(lorentz.in_cone(&[int(5), int(3), int(4)]).unwrap());
    assert!(!lorentz.in_cone(&[int(5), int(3), int(5)]).unwrap());
}

#[test]
fn e_with_h_e_zero_is_rejected() {
    assert!(HyperbolicInstance::new(vamoslab::h4(), vec![int(0), int(0), int(1), int(0)]).is_err());
}

#[test]
fn zero_samples_is_an_error() {
    assert!(matches!(check_hyperbolic_sampled(&h4(), 0, 0), Err(Error::InvalidInput(_))));
    assert!(sample_cone_points(&h4(), 0, 0, SampleMode::Interior).unwrap().is_empty());
}

#[test]
fn boundary_shift_lands_on_the_boundary() {
    let h = h4();
    for i in 0..100 {
        let w = random_direction(4, &mut sample_rng(3, i));
        let v = h.boundary_shift(&w).unwrap();
        assert!(h.in_cone(&v).unwrap());
        // stepping back past the 2^-20 tolerance leaves the cone
        let back: Vec<Rational> = v.iter().zip(vamoslab::e()).map(|(x, e)| x - e * ratio(1, 1 << 19)).collect();
        assert!(!h.in_cone(&back).unwrap(), "sample {i}");
    }
}

#[test]
fn near_boundary_samples_are_close_to_zero() {
    let h = h4();
    let pts = sample_cone_points(&h, 200, 1, SampleMode::NearBoundary).unwrap();
    assert_eq!(pts.len(), 200);
    for v in &pts {
        let scale = v.iter().map(|x| rational_to_f64(x).abs()).fold(0.0, f64::max);
        let value = rational_to_f64(&h.h().evaluate(v).unwrap()) / scale.powi(4);
        assert!(value.abs() < 1e-3, "h4 = {value}");
    }
}

#[test]
fn samples_are_deterministic() {
    let a = sample_cone_points(&h4(), 20, 9, SampleMode::Interior).unwrap();
    assert_eq!(a, sample_cone_points(&h4(), 20, 9, SampleMode::Interior).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eigenvalues_count_with_multiplicity(v in direction()) {
        let ev = h4().eigenvalues_along(&v).unwrap();
        prop_assert_eq!(ev.iter().map(|r| r.multiplicity).sum::<u32>(), 4);
    }

    #[test]
    fn cone_is_closed_under_scaling(v in direction(), s in 1i64..20) {
        let h = h4();
        let scaled: Vec<Rational> = v.iter().map(|x| x * ratio(s, 3)).collect();
        prop_assert_eq!(h.in_cone(&v).unwrap(), h.in_cone(&scaled).unwrap());
    }

    #[test]
    fn moving_along_e_stays_inside(v in direction(), mu in 0i64..10, lambda in 1i64..5) {
        let h = h4();
        let v = h.boundary_shift(&v).unwrap();
        let w: Vec<Rational> = v.iter().zip(vamoslab::e()).map(|(x, e)| x * int(lambda) + e * int(mu)).collect();
        prop_assert!(h.in_cone(&w).unwrap());
    }
}
