//! Small infix parser for polynomial literals such as `"13684 x1^4 x2 - x3/2"`.
//!
//! Juxtaposition multiplies, `^` takes a nonnegative integer exponent, and
//! parentheses group. Variables are `x1 .. xN`.

use num_bigint::BigInt;

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            'x' => {
                let start = i + 1;
                i = start;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: usize = cs[start..i].iter().collect::<String>().parse()?;
                if idx == 0 {
                    return Err(Error::Parse("variables are numbered from x1".into()));
                }
                out.push(Tok::Var(idx - 1));
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = cs[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().map_err(|_| Error::Parse(digits))?));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly<Rational>> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<Rational>> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Minus => negate = !negate,
                Tok::Plus => {}
                _ => break,
            }
            self.pos += 1;
        }
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = match self.next() {
                        Some(Tok::Num(n)) if n != BigInt::from(0) => n,
                        _ => return Err(Error::Parse("expected nonzero integer after `/`".into())),
                    };
                    acc = acc.scale(&Rational::new(1.into(), d));
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                _ => break,
            }
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<Poly<Rational>> {
        let base = match self.next() {
            Some(Tok::Num(n)) => Poly::constant(self.nvars, Rational::from_integer(n)),
            Some(Tok::Var(i)) => {
                if i >= self.nvars {
                    return Err(Error::VariableOutOfRange {
                        index: i,
                        nvars: self.nvars,
                    });
                }
                Poly::var(self.nvars, i)
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                inner
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let k = match self.next() {
                Some(Tok::Num(n)) => u32::try_from(n)
                    .map_err(|_| Error::Parse("exponent too large".into()))?,
                _ => return Err(Error::Parse("expected exponent".into())),
            };
            return Ok(base.pow(k));
        }
        Ok(base)
    }
}

/// Parses an infix polynomial in `nvars` variables.
pub fn parse_poly(s: &str, nvars: usize) -> Result<Poly<Rational>> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Ok(Poly::zero(nvars));
    }
    let mut p = Parser { toks, pos: 0, nvars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn juxtaposition_and_fractions() {
        let p = parse_poly("13684 x1^4 x2 - 3/2 x3", 4).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.evaluate(&[int(1), int(1), int(2), int(0)]).unwrap(), int(13684 - 3));
        let q = parse_poly("-(x1 - x2)^2", 2).unwrap();
        assert_eq!(q.evaluate(&[int(3), int(1)]).unwrap(), int(-4));
        assert_eq!(parse_poly("x1/4", 1).unwrap().evaluate(&[int(1)]).unwrap(), ratio(1, 4));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x5", 4).is_err());
        assert!(parse_poly("(x1", 4).is_err());
        assert!(parse_poly("x1 $", 4).is_err());
        assert!(parse_poly("x0", 4).is_err());
    }
}
