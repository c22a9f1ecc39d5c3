//! Text form of polynomials.
//!
//! Accepted input: sums of signed terms built from integer or `p/q`
//! coefficients and the variables `x0, x1, x2, t` with non-negative integer
//! exponents. `*` between factors is optional, and parenthesised
//! sub-expressions may be multiplied or raised to powers.
//! Printing always produces the canonical form: terms in descending
//! graded-lex order, `*` between factors, e.g. `x0^2*x1 + x2^3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::multi::{Monomial, MultiPoly, Var};
use super::{PolyError, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Token {
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

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, PolyError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((
                    start,
                    Token::Int(s[start..i].parse().expect("ascii digits")),
                ));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Ident(s[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(PolyError::Syntax {
                    position: start,
                    message: format!(
                        "unexpected character {:?}",
                        s[start..].chars().next().unwrap()
                    ),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                -self.term()?
            }
            Some(Token::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc * self.factor()?;
                }
                Some(Token::Int(_) | Token::Ident(_) | Token::LParen) => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Token::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| PolyError::Syntax {
                        position: at,
                        message: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(PolyError::Syntax {
                    position: at,
                    message: "expected a non-negative integer exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    let at_den = self.offset();
                    match self.bump() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            Ok(MultiPoly::constant(Rational::new(n, d)))
                        }
                        Some(Token::Int(_)) => Err(PolyError::Syntax {
                            position: at_den,
                            message: "zero denominator".into(),
                        }),
                        _ => Err(PolyError::Syntax {
                            position: at_den,
                            message: "expected an integer denominator".into(),
                        }),
                    }
                } else {
                    Ok(MultiPoly::constant(Rational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => Var::from_name(&name)
                .map(MultiPoly::var)
                .ok_or(PolyError::UnknownVariable { name, position: at }),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(PolyError::Syntax {
                        position: self
                            .tokens
                            .get(self.pos - 1)
                            .map(|(o, _)| *o)
                            .unwrap_or(self.end),
                        message: "expected ')'".into(),
                    }),
                }
            }
            Some(_) => {
                self.pos -= 1;
                Err(self.error("expected a coefficient, variable or '('"))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<MultiPoly, PolyError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(PolyError::Syntax {
            position: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let poly = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

impl FromStr for MultiPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: [u32; 4],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

/// `{"terms": [{"e": [e0, e1, e2, et], "c": "p/q"}]}`, terms in descending order.
impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermRepr {
                    e: m.0,
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c: Rational =
                t.c.parse()
                    .map_err(|_| serde::de::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            terms.push((Monomial(t.e), c));
        }
        Ok(MultiPoly::from_terms(terms))
    }
}
