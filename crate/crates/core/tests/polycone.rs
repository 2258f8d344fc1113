mod common;

use hypercone::polycone::{canonicalize_form, dual_cone, member, LinForm, RayCone};
use hypercone::scalar::{int, ratio, Rational};
use hypercone::vamoslab;
use num_traits::Signed;
use proptest::prelude::*;

fn cone(rays: &[&[i64]]) -> RayCone {
    let rays: Vec<Vec<Rational>> = rays.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    RayCone::new(rays[0].len(), &rays).unwrap()
}

fn form(c: &[i64]) -> LinForm {
    LinForm::new(&c.iter().map(|&v| int(v)).collect::<Vec<_>>())
}

#[test]
fn planar_duals() {
    let mut d = dual_cone(&cone(&[&[1, 0], &[0, 1]])).unwrap();
    d.sort();
    assert_eq!(d, vec![form(&[0, 1]), form(&[1, 0])]);
    let mut d = dual_cone(&cone(&[&[1, 0], &[1, 1]])).unwrap();
    d.sort();
    assert_eq!(d, vec![form(&[0, 1]), form(&[1, -1])]);
}

#[test]
fn dual_of_p() {
    let p = vamoslab::builtin_vamos().p;
    let d = dual_cone(&p).unwrap();
    for l in &d {
        for r in p.rays() {
            assert!(!l.eval_int(r).is_negative());
        }
    }
    for r in p.rays_rational() {
        assert!(member(&p, &r, &d).unwrap());
    }
    assert!(member(&p, &vamoslab::e(), &d).unwrap());
    let dc = RayCone::new(4, &d.iter().map(LinForm::to_rationals).collect::<Vec<_>>()).unwrap();
    let dd = dual_cone(&dc).unwrap();
    let ddc = RayCone::new(4, &dd.iter().map(LinForm::to_rationals).collect::<Vec<_>>()).unwrap();
    assert!(common::same_cone(&p, &ddc).unwrap());
}

#[test]
fn dual_of_p_is_minimal() {
    let p = vamoslab::builtin_vamos().p;
    let d = dual_cone(&p).unwrap();
    // dropping a facet form must let in some point: search combinations of the other facets' rays
    for skip in 0..d.len() {
        let rest: Vec<LinForm> = d.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, l)| l.clone()).collect();
        let wider = RayCone::new(4, &rest.iter().map(LinForm::to_rationals).collect::<Vec<_>>()).unwrap();
        let gens = dual_cone(&wider).unwrap();
        assert!(
            gens.iter().any(|g| d[skip].eval(&g.to_rationals()).unwrap().is_negative()),
            "facet {} is redundant",
            d[skip]
        );
    }
}

#[test]
fn orthant_membership() {
    let o = cone(&[&[1, 0], &[0, 1]]);
    let d = dual_cone(&o).unwrap();
    assert!(!member(&o, &[int(-1), int(0)], &d).unwrap());
    assert!(member(&o, &[ratio(1, 3), int(2)], &d).unwrap());
}

#[test]
fn canonical_forms() {
    assert_eq!(canonicalize_form(&[ratio(2, 3), ratio(4, 3)]), form(&[1, 2]));
    assert!(canonicalize_form(&[int(0), int(0)]).is_zero());
    assert_eq!(canonicalize_form(&[int(-2), int(-4)]), form(&[-1, -2]));
}

#[test]
fn double_duality_on_random_cones() {
    common::double_duality(100, 1).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nonnegative_combinations_are_members(seed in any::<u64>(), weights in prop::collection::vec(0i64..6, 17)) {
        let p = vamoslab::builtin_vamos().p;
        let d = dual_cone(&p).unwrap();
        let rays = p.rays_rational();
        let mut v = vec![int(0); 4];
        for (r, w) in rays.iter().zip(&weights) {
            for (x, y) in v.iter_mut().zip(r) {
                *x += y * int(*w) * ratio(1 + (seed % 5) as i64, 3);
            }
        }
        prop_assert!(member(&p, &v, &d).unwrap());
    }
}
