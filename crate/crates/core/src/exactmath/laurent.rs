use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::forward_owned;
use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Laurent polynomial `body(t) * t^offset`.
///
/// Canonical form: the body has a nonzero constant term, or the whole value
/// is zero with offset 0. Two equal Laurent polynomials are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    body: Polynomial,
    offset: i64,
}

impl LaurentPolynomial {
    pub fn new(body: Polynomial, offset: i64) -> Self {
        if body.is_zero() {
            return Self::zero();
        }
        let low = body.coeffs().iter().take_while(|c| c.is_zero()).count();
        let body = if low == 0 {
            body
        } else {
            Polynomial::new(body.coeffs()[low..].to_vec())
        };
        LaurentPolynomial {
            body,
            offset: offset + low as i64,
        }
    }

    pub fn zero() -> Self {
        LaurentPolynomial {
            body: Polynomial::zero(),
            offset: 0,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(Polynomial::constant(c), 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * t^k` for any integer `k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::new(Polynomial::constant(c), k)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (k, c)| acc + Self::monomial(c, k))
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.offset == 0 && self.body.is_constant())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        self.body.degree().map(|d| d as i64 + self.offset)
    }

    pub fn coeff(&self, k: i64) -> Rational {
        let i = k - self.offset;
        if i < 0 {
            Rational::zero()
        } else {
            self.body.coeff(i as usize)
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i as i64 + self.offset, c))
    }

    /// The ordinary polynomial, when no negative powers occur.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        (self.offset >= 0).then(|| self.body.shift(self.offset as usize))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.body.scale(c), self.offset)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            body: self.body.clone(),
            offset: self.offset + k,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `t -> lambda * t`.
    pub fn rescale_variable(&self, lambda: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c * super::rational_pow(lambda, k))))
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if self.offset < 0 && x.is_zero() {
            return Err(Error::EvaluationAtPole);
        }
        Ok(self.body.evaluate(x) * super::rational_pow(x, self.offset))
    }
}

/// `outer(inner)` where `inner` may carry negative powers.
pub fn compose(outer: &Polynomial, inner: &LaurentPolynomial) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::zero();
    for c in outer.coeffs().iter().rev() {
        acc = &(&acc * inner) + &LaurentPolynomial::constant(c.clone());
    }
    acc
}

impl From<Polynomial> for LaurentPolynomial {
    fn from(p: Polynomial) -> Self {
        LaurentPolynomial::new(p, 0)
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().collect();
        super::parse::write_terms(f, terms.into_iter().rev())
    }
}

fn aligned(a: &LaurentPolynomial, b: &LaurentPolynomial) -> (Polynomial, Polynomial, i64) {
    let off = a.offset.min(b.offset);
    (
        a.body.shift((a.offset - off) as usize),
        b.body.shift((b.offset - off) as usize),
        off,
    )
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (x, y, off) = aligned(self, rhs);
        LaurentPolynomial::new(&x + &y, off)
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial::new(&self.body * &rhs.body, self.offset + rhs.offset)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            body: -&self.body,
            offset: self.offset,
        }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

forward_owned!(LaurentPolynomial, Add add, Sub sub, Mul mul);
