use serde::{Deserialize, Serialize};

use super::{Poly, PolyVec};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

/// `{"nvars": n, "terms": [{"c": "num/den", "e": [..]}]}`, terms ascending in term order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

/// `{"nvars": n, "entries": [PolyJson terms lists]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PolyVecJson {
    pub nvars: usize,
    pub entries: Vec<Vec<TermJson>>,
}

impl From<&Poly<Rational>> for PolyJson {
    fn from(p: &Poly<Rational>) -> Self {
        PolyJson {
            nvars: p.nvars(),
            terms: terms_json(p),
        }
    }
}

fn terms_json(p: &Poly<Rational>) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            c: format_rational(c),
            e: m.exps().to_vec(),
        })
        .collect()
}

fn poly_from_terms(nvars: usize, terms: &[TermJson]) -> Result<Poly<Rational>> {
    let parsed = terms
        .iter()
        .map(|t| Ok((parse_rational(&t.c)?, t.e.clone())))
        .collect::<Result<Vec<_>>>()?;
    Poly::from_terms(nvars, parsed)
}

impl TryFrom<&PolyJson> for Poly<Rational> {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self> {
        poly_from_terms(j.nvars, &j.terms)
    }
}

impl From<&PolyVec<Rational>> for PolyVecJson {
    fn from(v: &PolyVec<Rational>) -> Self {
        PolyVecJson {
            nvars: v.nvars(),
            entries: v.entries().iter().map(terms_json).collect(),
        }
    }
}

impl TryFrom<&PolyVecJson> for PolyVec<Rational> {
    type Error = Error;

    fn try_from(j: &PolyVecJson) -> Result<Self> {
        let entries = j
            .entries
            .iter()
            .map(|t| poly_from_terms(j.nvars, t))
            .collect::<Result<Vec<_>>>()?;
        PolyVec::new(entries)
    }
}

impl Poly<Rational> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(s)?;
        Poly::try_from(&j)
    }
}

impl PolyVec<Rational> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PolyVecJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PolyVecJson = serde_json::from_str(s)?;
        PolyVec::try_from(&j)
    }
}
