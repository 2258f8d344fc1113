use serde::{Deserialize, Serialize};

use super::{SymMatrix, SymPencil};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Rational};

/// `{"n": n, "m": m, "matrices": [[["num/den", ..], ..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PencilJson {
    pub n: usize,
    pub m: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

impl From<&SymPencil<Rational>> for PencilJson {
    fn from(p: &SymPencil<Rational>) -> Self {
        PencilJson {
            n: p.nvars(),
            m: p.size(),
            matrices: p
                .matrices()
                .iter()
                .map(|a| {
                    a.rows()
                        .iter()
                        .map(|r| r.iter().map(format_rational).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<&PencilJson> for SymPencil<Rational> {
    type Error = Error;

    fn try_from(j: &PencilJson) -> Result<Self> {
        if j.matrices.len() != j.n {
            return Err(Error::Shape(format!(
                "\"n\" is {} but {} matrices given",
                j.n,
                j.matrices.len()
            )));
        }
        let mats = j
            .matrices
            .iter()
            .map(|a| {
                if a.len() != j.m {
                    return Err(Error::Shape(format!("expected {} rows, got {}", j.m, a.len())));
                }
                let rows = a
                    .iter()
                    .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                SymMatrix::from_rows(rows)
            })
            .collect::<Result<Vec<_>>>()?;
        SymPencil::new(mats)
    }
}

impl SymPencil<Rational> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PencilJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PencilJson = serde_json::from_str(s)?;
        SymPencil::try_from(&j)
    }
}
