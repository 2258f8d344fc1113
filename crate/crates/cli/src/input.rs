use std::path::Path;

use hypercone::pencil::SymPencil;
use hypercone::polycone::RayCone;
use hypercone::ring::{parse_poly, Poly, PolyVec};
use hypercone::scalar::{parse_point, Rational};

use crate::commands::Failure;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn is_json(s: &str) -> bool {
    s.trim_start().starts_with('{')
}

pub fn point(s: &str, what: &str) -> Result<Vec<Rational>, Failure> {
    parse_point(s).map_err(|e| Failure::usage(format!("--{what}: {e}")))
}

/// JSON, or infix text in `nvars` variables.
pub fn poly(path: &Path, nvars: usize) -> Result<Poly<Rational>, Failure> {
    let s = read(path)?;
    let p = if is_json(&s) {
        Poly::from_json(&s)
    } else {
        parse_poly(s.trim(), nvars)
    }
    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if p.nvars() != nvars {
        return Err(Failure::usage(format!(
            "{}: {} variables, but the point has {nvars} coordinates",
            path.display(),
            p.nvars()
        )));
    }
    Ok(p)
}

/// JSON, or one infix polynomial per nonblank line.
pub fn poly_vec(path: &Path, nvars: usize) -> Result<PolyVec<Rational>, Failure> {
    let s = read(path)?;
    let v = if is_json(&s) {
        PolyVec::from_json(&s)
    } else {
        s.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| parse_poly(l, nvars))
            .collect::<hypercone::Result<Vec<_>>>()
            .and_then(PolyVec::new)
    }
    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if v.nvars() != nvars {
        return Err(Failure::usage(format!("{}: expected {nvars} variables", path.display())));
    }
    Ok(v)
}

pub fn pencil(path: &Path) -> Result<SymPencil<Rational>, Failure> {
    SymPencil::from_json(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn rays(path: &Path) -> Result<RayCone, Failure> {
    RayCone::from_json(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}
