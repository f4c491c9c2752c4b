//! Plain-text polynomial grammar.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' INT]
//! atom   := INT ['/' INT] | IDENT | '(' poly ')'
//! ```
//!
//! Example: `3/4 * x0^2 * la - 2 * x1 + 1`. Printing a `MultiPoly<BigRational>`
//! with `Display` produces this grammar, and parsing it back yields the same value.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::Field;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
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
            _ if c.is_whitespace() => i += 1,
            '+' => (out.push(Tok::Plus), i += 1).1,
            '-' => (out.push(Tok::Minus), i += 1).1,
            '*' => (out.push(Tok::Star), i += 1).1,
            '/' => (out.push(Tok::Slash), i += 1).1,
            '^' => (out.push(Tok::Caret), i += 1).1,
            '(' => (out.push(Tok::LParen), i += 1).1,
            ')' => (out.push(Tok::RParen), i += 1).1,
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = cs[start..i].iter().collect();
                out.push(Tok::Int(text.parse().expect("digits")));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(cs[start..i].iter().collect()));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} at {i}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    vars: &'a Arc<[String]>,
}

type Q = MultiPoly<BigRational>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn poly(&mut self) -> Result<Q> {
        let negate = self.peek() == Some(&Tok::Minus);
        if negate {
            self.pos += 1;
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc.add_assign(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc.add_assign(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Q> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Q> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let Some(Tok::Int(n)) = self.toks.get(self.pos + 1) else {
            return Err(Error::Parse("expected exponent after '^'".into()));
        };
        let e = u32::try_from(n).map_err(|_| Error::Parse(format!("exponent {n} too large")))?;
        self.pos += 2;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Q> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut q = BigRational::from_integer(n.clone());
                if self.peek() == Some(&Tok::Slash) {
                    let Some(Tok::Int(d)) = self.toks.get(self.pos + 1) else {
                        return Err(Error::Parse("expected denominator after '/'".into()));
                    };
                    if d == &BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    q = BigRational::new(n, d.clone());
                    self.pos += 2;
                }
                Ok(MultiPoly::constant(self.vars, q))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                Ok(MultiPoly::var(self.vars, idx))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::Parse("expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("expected a factor, found {other:?}"))),
        }
    }
}

/// Parses a polynomial with rational coefficients.
///
/// With `vars = None` the variables are taken in order of first appearance;
/// otherwise every variable must belong to the given list.
pub fn parse_poly(text: &str, vars: Option<&Arc<[String]>>) -> Result<MultiPoly<BigRational>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let vars: Arc<[String]> = match vars {
        Some(v) => v.clone(),
        None => {
            let mut names: Vec<String> = Vec::new();
            for t in &toks {
                if let Tok::Ident(n) = t {
                    if !names.contains(n) {
                        names.push(n.clone());
                    }
                }
            }
            names.into()
        }
    };
    let mut p = Parser { toks: &toks, pos: 0, vars: &vars };
    let out = p.poly()?;
    if let Some(t) = p.peek() {
        return Err(Error::Parse(format!("unexpected token {t:?}")));
    }
    Ok(out)
}

/// A named value that may appear in text parsed by [`parse_in`].
#[derive(Clone, Debug)]
pub enum Symbol<K> {
    /// A field element such as `i`, `ν` or `1/(1−λ)`.
    Scalar(K),
    /// An abbreviation for a polynomial over the target variables.
    Poly(MultiPoly<K>),
}

/// Parses `text` over `vars` extended by the symbol names, then replaces each
/// symbol by its value. Coefficients of the result live in `K`.
pub fn parse_in<K: Field>(
    text: &str,
    vars: &Arc<[String]>,
    symbols: &[(&str, Symbol<K>)],
) -> Result<MultiPoly<K>> {
    let all: Arc<[String]> =
        vars.iter().cloned().chain(symbols.iter().map(|(n, _)| n.to_string())).collect();
    let p = parse_poly(text, Some(&all))?.map_coeffs(K::from_rational);
    let mut images: Vec<MultiPoly<K>> = (0..vars.len()).map(|i| MultiPoly::var(vars, i)).collect();
    for (name, sym) in symbols {
        images.push(match sym {
            Symbol::Scalar(c) => MultiPoly::constant(vars, c.clone()),
            Symbol::Poly(q) => q
                .with_vars(vars)
                .ok_or_else(|| Error::Parse(format!("symbol {name} uses unknown variables")))?,
        });
    }
    Ok(p.subst(&images))
}
