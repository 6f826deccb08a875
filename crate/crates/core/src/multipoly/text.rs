//! Text format for polynomials over ℚ: `T2^4 + 2/13*T1^4*T2^3 - 5`.
//!
//! Sums, products, `/` by constants, `^` with non-negative integer
//! exponents and parentheses are accepted. Printing goes through `Display`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use num_traits::Zero;

use super::{Monomial, MultiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::exactring::{ExactInt, Rational, Rationals, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(ExactInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

enum Naming {
    /// `T1`, `T2`, ...
    Indexed,
    /// any single identifier, mapped to the first variable
    Single,
}

fn tokenize(s: &str, naming: &Naming) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut single: Option<String> = None;
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
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
            '0'..='9' => {
                let st = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(ExactInt::from_str(&s[st..i]).map_err(|e| Error::Parse(e.to_string()))?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let st = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                let name = &s[st..i];
                match naming {
                    Naming::Indexed => {
                        let idx = name
                            .strip_prefix('T')
                            .and_then(|d| d.parse::<usize>().ok())
                            .filter(|&k| k >= 1)
                            .ok_or_else(|| Error::Parse(format!("unknown variable `{}`", name)))?;
                        out.push(Tok::Var(idx - 1));
                    }
                    Naming::Single => {
                        match &single {
                            Some(prev) if prev != name => {
                                return Err(Error::Parse(format!(
                                    "expected a univariate polynomial, found `{}` and `{}`",
                                    prev, name
                                )))
                            }
                            _ => single = Some(name.into()),
                        }
                        out.push(Tok::Var(0));
                    }
                }
            }
            other => return Err(Error::Parse(format!("unexpected character `{}`", other))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    n: usize,
}

type P = MultiPoly<Rationals>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = P::zero(Rationals, self.n);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    if !f.is_constant() {
                        return Err(Error::Parse("division by a non-constant".into()));
                    }
                    let c = f.coeff(&Monomial::one(self.n));
                    if c.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<P> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(k)) => {
                    let k: u32 = k.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(k));
                }
                _ => return Err(Error::Parse("expected an exponent after `^`".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<P> {
        match self.next() {
            Some(Tok::Num(k)) => Ok(P::constant(Rationals, self.n, Rationals.from_int(&k))),
            Some(Tok::Var(i)) => Ok(P::var(Rationals, self.n, i)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            Some(Tok::Minus) => Ok(-&self.atom()?),
            Some(t) => Err(Error::Parse(format!("unexpected token {:?}", t))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

fn parse_tokens(toks: &[Tok], n: usize) -> Result<P> {
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0, n };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(e)
}

/// Parses a polynomial in `T1, T2, …`. With `arity = None` the number of
/// variables is the largest index that occurs (at least one).
pub fn parse_poly(s: &str, arity: Option<usize>) -> Result<MultiPoly<Rationals>> {
    let toks = tokenize(s, &Naming::Indexed)?;
    let used = toks.iter().filter_map(|t| if let Tok::Var(i) = t { Some(i + 1) } else { None }).max().unwrap_or(1);
    let n = match arity {
        Some(n) if used > n => return Err(Error::ArityMismatch { expected: n, found: used }),
        Some(n) => n,
        None => used,
    };
    parse_tokens(&toks, n)
}

/// Parses a univariate polynomial written in any single variable name.
pub fn parse_univariate(s: &str) -> Result<UniPoly<Rationals>> {
    let toks = tokenize(s, &Naming::Single)?;
    let p = parse_tokens(&toks, 1)?;
    Ok(UniPoly::from_multi(&p, 0))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let p = parse_poly(s, Some(1))?;
    if !p.is_constant() {
        return Err(Error::Parse(format!("`{}` is not a number", s)));
    }
    Ok(p.coeff(&Monomial::one(1)))
}
