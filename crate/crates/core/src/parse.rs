//! The element grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary | unary)*       juxtaposition multiplies
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 't' | 'l' | '(' expr ')'
//! ```
//!
//! `t` is the extension generator and `l` the indeterminate of a rational
//! function field. Division is allowed only by nonzero elements of the
//! ground field. Errors carry the byte offset of the offending token.

use num::BigInt;

use crate::curve::CurvePoint;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::GroundField;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => Tok::Ident(c as char),
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::parse(i, format!("unexpected character '{ch}'")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: GroundField> {
    k: &'a F,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    allow_t: bool,
}

impl<F: GroundField> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let k = self.k;
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(k, &self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(k, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let k = self.k;
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(k, &self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(Error::parse(at, "division by a non-constant in t"));
                    }
                    if d.is_zero() {
                        return Err(Error::parse(at, "division by zero"));
                    }
                    let inv = k.inv(&d.coeffs()[0])?;
                    acc = acc.scale(k, &inv);
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {
                    acc = acc.mul(k, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly<F>> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg(self.k))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| Error::parse(at, format!("exponent {n} is too large")))?;
                Ok(base.pow(self.k, e))
            }
            _ => Err(Error::parse(at, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let k = self.k;
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Poly::constant(k, k.from_bigint(&n))),
            Some(Tok::Ident('t')) if self.allow_t => Ok(Poly::x(k)),
            Some(Tok::Ident('l')) => match k.indeterminate() {
                Some(l) => Ok(Poly::constant(k, l)),
                None => Err(Error::parse(
                    at,
                    format!("'l' is not defined over {}", k.descriptor()),
                )),
            },
            Some(Tok::Ident(c)) => Err(Error::parse(at, format!("unknown variable '{c}'"))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::parse(close, "expected ')'")),
                }
            }
            Some(_) => Err(Error::parse(at, "expected a number, variable or '('")),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

fn parse_with<F: GroundField>(k: &F, text: &str, allow_t: bool) -> Result<Poly<F>> {
    let mut p = Parser {
        k,
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
        allow_t,
    };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::parse(p.offset(), "unexpected trailing input"));
    }
    Ok(v)
}

/// A polynomial in `t` with coefficients in `k`.
pub fn parse_poly<F: GroundField>(k: &F, text: &str) -> Result<Poly<F>> {
    parse_with(k, text, true)
}

/// An element of `k`; `t` is rejected.
pub fn parse_scalar<F: GroundField>(k: &F, text: &str) -> Result<F::Elem> {
    Ok(parse_with(k, text, false)?.constant_term(k))
}

/// `O` or `(x, y)` with coordinates in `k`.
pub fn parse_point<F: GroundField>(k: &F, text: &str) -> Result<CurvePoint<F>> {
    let s = text.trim();
    if s == "O" {
        return Ok(CurvePoint::Infinity);
    }
    let lead = text.len() - text.trim_start().len();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(lead, "expected 'O' or '(x, y)'"))?;
    let mut depth = 0i32;
    let mut comma = None;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if comma.is_some() {
                    return Err(Error::parse(lead + 1 + i, "too many coordinates"));
                }
                comma = Some(i);
            }
            _ => {}
        }
    }
    let comma = comma.ok_or_else(|| Error::parse(lead, "expected two coordinates"))?;
    let shift = |e: Error, by: usize| match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + by,
            message,
        },
        other => other,
    };
    let x = parse_scalar(k, &inner[..comma]).map_err(|e| shift(e, lead + 1))?;
    let y = parse_scalar(k, &inner[comma + 1..]).map_err(|e| shift(e, lead + 2 + comma))?;
    Ok(CurvePoint::Affine { x, y })
}
