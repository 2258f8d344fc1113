mod common;

use hypercone::pencil::{SymMatrix, SymPencil};
use hypercone::ring::{parse_poly, PolyVec};
use hypercone::scalar::{int, ratio, Rational};
use hypercone::vamoslab;
use proptest::prelude::*;

fn quadric_pencil() -> SymPencil<Rational> {
    // [[x1 + x2, x3], [x3, x1 - x2]]
    let m = |r: [[i64; 2]; 2]| SymMatrix::from_rows(r.iter().map(|x| x.iter().map(|&v| int(v)).collect()).collect()).unwrap();
    SymPencil::new(vec![m([[1, 0], [0, 1]]), m([[1, 0], [0, -1]]), m([[0, 1], [1, 0]])]).unwrap()
}

#[test]
fn quadric_pencil_examples() {
    let p = quadric_pencil();
    assert_eq!(p.eval(&[int(1), int(0), int(0)]).unwrap(), SymMatrix::identity(2));
    assert_eq!(p.det().unwrap(), parse_poly("x1^2 - x2^2 - x3^2", 3).unwrap());
    let f = PolyVec::new(vec![parse_poly("x1 - x2", 3).unwrap(), parse_poly("-x3", 3).unwrap()]).unwrap();
    let af = p.apply(&f).unwrap();
    assert_eq!(af.get(0), &parse_poly("x1^2 - x2^2 - x3^2", 3).unwrap());
    assert!(af.get(1).is_zero());
    assert_eq!(p.adjugate_row(0).unwrap(), f);
}

#[test]
fn vamos_pencil_at_e() {
    let p = vamoslab::pencil();
    let ae = p.eval(&vamoslab::e()).unwrap();
    assert_eq!(ae, p.matrix(0).add(p.matrix(1)).unwrap());
    assert!(ae.is_positive_definite());
    assert!(ae.eigen_lower_bound(&ratio(1, 2)).unwrap());
    let g = p.apply(&vamoslab::f()).unwrap();
    for entry in g.entries() {
        assert!(matches!(entry.exact_divide(&vamoslab::h4()).unwrap().total_degree(), None | Some(0)));
    }
}

#[test]
fn adjugate_identity_on_random_pencils() {
    common::adjugate_identity(100, 1).unwrap();
}

fn pencil_strategy(n: usize, m: usize) -> impl Strategy<Value = SymPencil<Rational>> {
    any::<u64>().prop_map(move |seed| common::random_pencil(&mut common::rng(seed), n, m, 4))
}

fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..=9, 1i64..=4).prop_map(|(a, b)| ratio(a, b)), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn det_commutes_with_evaluation(p in pencil_strategy(3, 4), v in point(3)) {
        let det = p.det().unwrap();
        prop_assert_eq!(det.evaluate(&v).unwrap(), p.eval(&v).unwrap().det().unwrap());
    }

    #[test]
    fn det_by_interpolation(p in pencil_strategy(2, 4)) {
        // det A(x1, x2) is a binary form of degree 4: five values on x2 = 1 fix it
        let det = p.det().unwrap();
        for t in -2..=2 {
            let v = [int(t), int(1)];
            prop_assert_eq!(det.evaluate(&v).unwrap(), p.eval(&v).unwrap().det().unwrap());
        }
    }

    #[test]
    fn positive_definite_implies_positive_eigenvalues(p in pencil_strategy(1, 4)) {
        let a = p.matrix(0);
        let m = a.sub(&SymMatrix::identity(4).scale(&int(-20))).unwrap();
        for x in [a.clone(), m] {
            if x.is_positive_definite() {
                prop_assert!(x.eigen_lower_bound(&int(0)).unwrap());
            }
        }
    }
}
