//! Recursive-descent parser for sums of products, shared by scalar and
//! operator expressions.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::elem::Elem;
use super::gauss::Gauss;
use super::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

/// Values the parser can combine.
pub trait Operand: Sized {
    fn from_integer(n: BigInt) -> Self;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn neg(self) -> Self;
    fn div(self, o: Self) -> Result<Self, String>;
    fn pow(self, e: i64) -> Result<Self, String>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k] as char;
        if c.is_ascii_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < bytes.len() && (bytes[k] as char).is_ascii_digit() {
                k += 1;
            }
            let n: BigInt = src[start..k].parse().unwrap();
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < bytes.len()
                && ((bytes[k] as char).is_ascii_alphanumeric() || bytes[k] == b'_')
            {
                k += 1;
            }
            out.push((start, Tok::Ident(src[start..k].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((k, Tok::Op(c)));
            k += 1;
        } else {
            return Err(ParseError::new(k, format!("unexpected character '{}'", c)));
        }
    }
    Ok(out)
}

struct Parser<'a, T> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    resolve: &'a dyn Fn(&str) -> Option<T>,
}

impl<'a, T: Operand> Parser<'a, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<T, ParseError> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<T, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(self.unary()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.at += 1;
                let d = self.unary()?;
                acc = acc.div(d).map_err(|m| ParseError::new(pos, m))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<T, ParseError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<T, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        let pos = self.pos();
        self.at += 1;
        let neg = self.eat('-');
        let e = match self.toks.get(self.at) {
            Some((_, Tok::Num(n))) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| ParseError::new(pos, "exponent too large"))?;
                self.at += 1;
                if neg {
                    -v
                } else {
                    v
                }
            }
            _ => return Err(ParseError::new(self.pos(), "expected integer exponent")),
        };
        base.pow(e).map_err(|m| ParseError::new(pos, m))
    }

    fn primary(&mut self) -> Result<T, ParseError> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Num(n))) => {
                self.at += 1;
                Ok(T::from_integer(n))
            }
            Some((_, Tok::Ident(name))) => {
                self.at += 1;
                (self.resolve)(&name)
                    .ok_or_else(|| ParseError::new(pos, format!("unknown identifier '{}'", name)))
            }
            Some((_, Tok::Op('('))) => {
                self.at += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(ParseError::new(self.pos(), "expected ')'"));
                }
                Ok(v)
            }
            Some((_, Tok::Op(c))) => Err(ParseError::new(pos, format!("unexpected '{}'", c))),
            None => Err(ParseError::new(pos, "unexpected end of input")),
        }
    }
}

/// Parses `src` into a `T`, resolving identifiers through `resolve`.
pub fn parse_with<T: Operand>(
    src: &str,
    resolve: &dyn Fn(&str) -> Option<T>,
) -> Result<T, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
        resolve,
    };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(ParseError::new(p.pos(), "trailing input"));
    }
    Ok(v)
}

impl Operand for Scalar {
    fn from_integer(n: BigInt) -> Self {
        Scalar::from_elem(Elem::from_gauss(Gauss::from_rational(
            BigRational::from_integer(n),
        )))
    }
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
    fn neg(self) -> Self {
        self.neg_ref()
    }
    fn div(self, o: Self) -> Result<Self, String> {
        self.div_ref(&o).map_err(|e| e.to_string())
    }
    fn pow(self, e: i64) -> Result<Self, String> {
        Scalar::pow(&self, e).map_err(|e| e.to_string())
    }
}

/// Resolves the scalar symbols `q`, `a`, `M`, `i`, `r`.
pub fn scalar_symbol(name: &str) -> Option<Scalar> {
    match name {
        "q" => Some(Scalar::q()),
        "a" => Some(Scalar::a()),
        "M" => Some(Scalar::mass()),
        "i" => Some(Scalar::i()),
        "r" => Some(Scalar::r()),
        _ => None,
    }
}

pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    parse_with(src, &scalar_symbol)
}

impl std::str::FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}
