//! Text parser for polynomials.
//!
//! ```text
//! poly  := [sign] term { sign term }
//! term  := coeff | coeff "*" monos | monos
//! monos := var ["^" nat] { "*" var ["^" nat] }
//! coeff := integer | integer "/" positive-integer
//! ```
//! Whitespace is insignificant.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("exponent overflow at position {pos}")]
    ExponentOverflow { pos: usize },
    #[error("denominator at position {pos} is zero in the coefficient field")]
    ZeroDenominator { pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '/' => out.push((start, Tok::Slash)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    message: alloc::format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            message: message.to_string(),
        }
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) if !first => {
                    self.at += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    true
                }
                None if first => return Err(self.syntax("empty polynomial")),
                None => break,
                _ if first => false,
                _ => return Err(self.syntax("expected `+` or `-`")),
            };
            let (m, c) = self.term()?;
            let c = if negative { -c } else { c };
            out.add_term(m, &c);
            first = false;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar), ParseError> {
        let ch = self.ring.characteristic();
        let n = self.ring.num_vars();
        match self.peek() {
            Some(Tok::Int(_)) => {
                let c = self.coeff()?;
                if self.peek() == Some(&Tok::Star) {
                    self.at += 1;
                    let m = self.monos()?;
                    Ok((m, c))
                } else {
                    Ok((Monomial::one(n), c))
                }
            }
            Some(Tok::Ident(_)) => Ok((self.monos()?, Scalar::one(ch))),
            _ => Err(self.syntax("expected a coefficient or a variable")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s.parse::<BigInt>().map_err(|_| self.syntax("bad integer"))?;
                self.at += 1;
                Ok(v)
            }
            _ => Err(self.syntax("expected an integer")),
        }
    }

    fn coeff(&mut self) -> Result<Scalar, ParseError> {
        let ch = self.ring.characteristic();
        let num = self.integer()?;
        if self.peek() == Some(&Tok::Slash) {
            self.at += 1;
            let pos = self.pos();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(ParseError::Syntax {
                    pos,
                    message: "denominator must be positive".to_string(),
                });
            }
            Scalar::from_fraction(&num, &den, ch).ok_or(ParseError::ZeroDenominator { pos })
        } else {
            Ok(Scalar::from_bigint(&num, ch))
        }
    }

    fn monos(&mut self) -> Result<Monomial, ParseError> {
        let mut exps = alloc::vec![0u32; self.ring.num_vars()];
        loop {
            let pos = self.pos();
            let name = match self.peek() {
                Some(Tok::Ident(s)) => s.clone(),
                _ => return Err(self.syntax("expected a variable")),
            };
            self.at += 1;
            let idx = self
                .ring
                .var_index(&name)
                .ok_or(ParseError::UnknownVariable { pos, name })?;
            let mut e = 1u32;
            if self.peek() == Some(&Tok::Caret) {
                self.at += 1;
                let epos = self.pos();
                e = match self.peek() {
                    Some(Tok::Int(s)) => s
                        .parse::<u32>()
                        .map_err(|_| ParseError::ExponentOverflow { pos: epos })?,
                    _ => return Err(self.syntax("expected an exponent")),
                };
                self.at += 1;
            }
            exps[idx] = exps[idx]
                .checked_add(e)
                .ok_or(ParseError::ExponentOverflow { pos })?;
            exps.iter()
                .try_fold(0u32, |acc, &x| acc.checked_add(x))
                .ok_or(ParseError::ExponentOverflow { pos })?;
            if self.peek() == Some(&Tok::Star) {
                self.at += 1;
            } else {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }
}

/// Parses `text` into a normalized polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        ring,
    };
    p.poly()
}
