use hypercone::ring::{parse_poly, Homogeneity, Monomial, Poly};
use hypercone::scalar::{int, ratio, Rational};
use hypercone::vamoslab;
use proptest::prelude::*;

fn p(s: &str) -> Poly<Rational> {
    parse_poly(s, 4).unwrap()
}

#[test]
fn h4_from_its_factored_form() {
    let s = p("x1 + x2 + x3 + x4");
    let e3 = p("x1 x2 x3 + x1 x2 x4 + x1 x3 x4 + x2 x3 x4");
    let h = p("x1^2 x2^2") + s * e3.scale(&int(4));
    assert_eq!(h, vamoslab::h4());
}

#[test]
fn values_at_e() {
    let e = vamoslab::e();
    assert_eq!(vamoslab::h4().evaluate(&e).unwrap(), int(1));
    assert_eq!(vamoslab::h4().evaluate(&vec![int(0); 4]).unwrap(), int(0));
    // the four coefficients of q free of x3 and x4
    assert_eq!(vamoslab::q().evaluate(&e).unwrap(), int(13684 + 44736 + 43092 + 12672));
}

#[test]
fn homogeneity_of_the_data() {
    assert_eq!(vamoslab::h4().homogeneity(), Homogeneity::Degree(4));
    assert_eq!(vamoslab::q().homogeneity(), Homogeneity::Degree(5));
    assert_eq!(p("x1 + x1^2").homogeneity(), Homogeneity::NotHomogeneous);
}

#[test]
fn det_over_h4_is_eight_q() {
    let det = vamoslab::pencil().det().unwrap();
    let c = det.exact_divide(&vamoslab::h4()).unwrap();
    let q = vamoslab::q();
    for m in Monomial::all_of_degree(4, 5) {
        assert_eq!(c.coeff(&m), q.coeff(&m) * int(8), "coefficient of {m}");
    }
    assert_eq!(c.len(), q.len());
}

#[test]
fn euler_identity_for_h4() {
    let h = vamoslab::h4();
    let mut acc = Poly::zero(4);
    for i in 0..4 {
        acc = acc + Poly::var(4, i) * h.partial_derivative(i).unwrap();
    }
    assert_eq!(acc, h.scale(&int(4)));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| ratio(a, b))
}

fn poly_strategy(max_deg: u32) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec((small_rational(), prop::collection::vec(0u32..=max_deg, 3)), 0..6)
        .prop_map(|terms| Poly::from_terms(3, terms).unwrap())
}

fn homogeneous_strategy(d: u32) -> impl Strategy<Value = Poly<Rational>> {
    let ms = Monomial::all_of_degree(3, d);
    prop::collection::vec((small_rational(), 0..ms.len()), 1..6).prop_map(move |terms| {
        let mut acc = Poly::zero(3);
        for (c, k) in terms {
            acc = acc + Poly::term(c, ms[k].clone());
        }
        acc
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(3)) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a * c);
    }

    #[test]
    fn division_undoes_multiplication(a in poly_strategy(3), b in poly_strategy(2)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((a.clone() * b.clone()).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn line_restriction_agrees_with_evaluation(h in homogeneous_strategy(3), e in point(), v in point(), t in small_rational()) {
        let u = h.restrict_to_line(&e, &v).unwrap();
        let x: Vec<Rational> = e.iter().zip(&v).map(|(a, b)| &t * a + b).collect();
        prop_assert_eq!(u.eval(&t), h.evaluate(&x).unwrap());
    }

    #[test]
    fn euler_identity(d in 1u32..5, seed in any::<u64>()) {
        let ms = Monomial::all_of_degree(3, d);
        let mut h = Poly::zero(3);
        for (k, m) in ms.iter().enumerate() {
            h = h + Poly::term(int(((seed >> (k % 60)) & 7) as i64 - 3), m.clone());
        }
        let mut acc = Poly::zero(3);
        for i in 0..3 {
            acc = acc + Poly::var(3, i) * h.partial_derivative(i).unwrap();
        }
        prop_assert_eq!(acc, h.scale(&int(d as i64)));
    }
}
