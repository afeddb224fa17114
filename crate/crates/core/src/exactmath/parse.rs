//! Text form of polynomials in `t`.
//!
//! Terms are `c`, `c*t^k`, `c*t`, `t^k` and `t`, joined by `+` or `-`
//! (the Unicode minus sign is accepted too). Coefficients are integers or
//! `p/q` rationals. Whitespace is ignored. Rendering emits descending powers
//! and omits zero coefficients, e.g. `t^2 + 1/3*t - 4`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LaurentPolynomial, Polynomial, Rational};
use crate::error::{Error, Result};

pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (i64, &'a Rational)>,
{
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if k == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        if k == 1 {
            f.write_str("t")?;
        } else {
            write!(f, "t^{k}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let mut line = 1;
        let mut column = 1;
        for c in self.src.chars().take(self.pos) {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = self.sign().unwrap_or(false);
        let here = self.pos;
        let d = self.digits()?;
        let e: i64 = d.try_into().map_err(|_| {
            let mut c = Cursor::new(self.src);
            c.pos = here;
            c.error("exponent out of range")
        })?;
        Ok(if neg { -e } else { e })
    }

    fn term(&mut self) -> Result<(i64, Rational)> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok((self.exponent()?, Rational::one()))
            }
            Some(c) if c.is_ascii_digit() => {
                let coef = self.coefficient()?;
                let star = self.peek() == Some('*');
                if star {
                    self.pos += 1;
                }
                if self.peek() == Some('t') {
                    self.pos += 1;
                    Ok((self.exponent()?, coef))
                } else if star {
                    Err(self.error("expected `t` after `*`"))
                } else {
                    Ok((0, coef))
                }
            }
            Some(c) => Err(self.error(format!("unexpected character `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn expression(&mut self) -> Result<Vec<(i64, Rational)>> {
        let mut terms = Vec::new();
        let mut neg = self.sign().unwrap_or(false);
        loop {
            let (k, c) = self.term()?;
            terms.push((k, if neg { -c } else { c }));
            match self.peek() {
                None => break,
                Some(_) => match self.sign() {
                    Some(s) => neg = s,
                    None => {
                        let c = self.peek().unwrap();
                        return Err(self.error(format!("expected `+` or `-`, found `{c}`")));
                    }
                },
            }
        }
        Ok(terms)
    }
}

pub fn parse_laurent(src: &str) -> Result<LaurentPolynomial> {
    let terms = Cursor::new(src).expression()?;
    Ok(LaurentPolynomial::from_terms(terms))
}

pub fn parse_polynomial(src: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(src);
    let start_terms = cur.expression()?;
    if start_terms.iter().any(|(k, _)| *k < 0) {
        let col = src.find('^').map(|i| src[..i].chars().count()).unwrap_or(0);
        cur.pos = col;
        return Err(cur.error("negative exponent in a polynomial"));
    }
    let l = LaurentPolynomial::from_terms(start_terms);
    Ok(l.to_polynomial().expect("no negative exponents"))
}

/// Parses `p/q` or an integer, with optional sign.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let mut cur = Cursor::new(src);
    let neg = cur.sign().unwrap_or(false);
    let v = cur.coefficient()?;
    if cur.peek().is_some() {
        return Err(cur.error("trailing input after rational"));
    }
    Ok(if neg { -v } else { v })
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s)
    }
}

macro_rules! text_serde {
    ($ty:ty, $what:literal) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse()
                    .map_err(|e: Error| serde::de::Error::custom(format!("{}: {e}", $what)))
            }
        }
    };
}

text_serde!(Polynomial, "polynomial");
text_serde!(LaurentPolynomial, "Laurent polynomial");
