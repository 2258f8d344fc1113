//! The specialized Vamos polynomial: embedded data and its verification pipeline.

pub mod data;
mod report;
mod support;

pub use report::{
    exact_steps, support_candidates, verify_bundle, verify_certificate, CertReport, Level, Step, VerifyOptions,
};
pub use support::{
    support_certificate, support_search, SupportCertificate, SupportOutcome, Tangency, SEARCH_SAMPLES, SEARCH_STARTS,
    SEARCH_TOL,
};

use crate::pencil::{SymMatrix, SymPencil};
use crate::polycone::RayCone;
use crate::ring::{parse_poly, Poly, PolyVec};
use crate::scalar::{int, parse_rational, ratio, Rational};

/// The embedded data. Fields are public so that tests can corrupt single entries.
#[derive(Debug, Clone, PartialEq)]
pub struct VamosBundle {
    pub h4: Poly<Rational>,
    pub e: Vec<Rational>,
    pub f: PolyVec<Rational>,
    pub pencil: SymPencil<Rational>,
    pub q: Poly<Rational>,
    pub p: RayCone,
    /// Constant cofactor with `A(x) f = h4 g`.
    pub g: Vec<Rational>,
}

pub fn builtin_vamos() -> VamosBundle {
    VamosBundle {
        h4: h4(),
        e: e(),
        f: f(),
        pencil: pencil(),
        q: q(),
        p: RayCone::new(4, &generators()).expect("embedded generators"),
        g: data::G.iter().map(|&v| int(v)).collect(),
    }
}

pub fn h4() -> Poly<Rational> {
    parse_poly(data::H4, 4).expect("embedded h4 parses")
}

pub fn q() -> Poly<Rational> {
    parse_poly(data::Q, 4).expect("embedded q parses")
}

pub fn e() -> Vec<Rational> {
    data::E.iter().map(|&v| int(v)).collect()
}

pub fn f() -> PolyVec<Rational> {
    PolyVec::new(data::F.iter().map(|s| parse_poly(s, 4).expect("embedded f parses")).collect())
        .expect("nonempty")
}

pub fn pencil() -> SymPencil<Rational> {
    let mats = [data::A1, data::A2, data::A3, data::A4]
        .iter()
        .map(|a| {
            SymMatrix::from_rows(a.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
                .expect("embedded matrices are symmetric")
        })
        .collect();
    SymPencil::new(mats).expect("uniform size")
}

pub fn generators() -> Vec<Vec<Rational>> {
    data::GENERATORS
        .iter()
        .map(|g| g.iter().map(|s| parse_rational(s).expect("embedded integer")).collect())
        .collect()
}

/// `num/den`, or just `num` for integers.
pub(crate) fn show(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        crate::scalar::format_rational(r)
    }
}

pub fn eigen_threshold() -> Rational {
    ratio(data::EIGEN_THRESHOLD.0, data::EIGEN_THRESHOLD.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_identity() {
        let d = pencil().det().unwrap();
        let rhs = (q() * h4()).scale(&int(data::DET_FACTOR));
        assert_eq!(d, rhs);
    }

    #[test]
    fn bundle_basics() {
        let b = builtin_vamos();
        assert_eq!(b.h4.evaluate(&b.e).unwrap(), int(1));
        assert_eq!(b.p.len(), 17);
        assert!(b.q.is_homogeneous_of(5));
    }
}
