use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{int, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `t` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. The zero polynomial is the empty
/// vector; every other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from integer coefficients in ascending order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// The monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// Composition `self(inner)`.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("r1 is nonzero");
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading_coeff().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Splits `self = scale * prim` where `prim` has coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::one(), Vec::new());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
        (Rational::new(g, den), ints)
    }

    /// Polynomial with coprime integer coefficients and positive leading
    /// coefficient, as a rational polynomial.
    pub fn primitive(&self) -> Polynomial {
        let (_, ints) = self.primitive_integer();
        Polynomial::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Square-free part (monic).
    pub fn square_free(&self) -> Polynomial {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
            .expect("gcd is nonzero")
            .expect("gcd divides")
            .monic()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (i as i64, c));
        super::parse::write_terms(f, terms)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty { (&self).$m(rhs) }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(Polynomial, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p(&[-4, 0, 1]) + p(&[1, 1]), p(&[-3, 1, 1]));
        assert_eq!(p(&[0, 1]) * p(&[1, 1]), p(&[0, 1, 1]));
        let q = p(&[3, -1, 7]);
        assert!((&q - &q).is_zero());
        assert_eq!((&q - &q).degree(), None);
    }

    #[test]
    fn division_examples() {
        let (q, r) = p(&[-4, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), p(&[-3])));
        let (q, r) = p(&[-4, 0, 1]).div_rem(&p(&[-2, 1])).unwrap();
        assert_eq!((q, r), (p(&[2, 1]), Polynomial::zero()));
        let a = p(&[5, 0, -3, 2]);
        assert_eq!(a.div_rem(&a).unwrap(), (Polynomial::one(), Polynomial::zero()));
        assert_eq!(a.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn xgcd_examples() {
        let (g, s, t) = p(&[0, 1]).xgcd(&p(&[1, 1]));
        assert_eq!((g, s, t), (Polynomial::one(), p(&[-1]), Polynomial::one()));

        let (g, s, t) = p(&[-4, 0, 1]).xgcd(&p(&[-2, 1]));
        assert_eq!(g, p(&[-2, 1]));
        assert_eq!(s, Polynomial::zero());
        assert_eq!(t, Polynomial::one());
    }

    #[test]
    fn primitive_form() {
        let q = Polynomial::new(vec![rat(-1, 2), rat(3, 4)]);
        let (scale, ints) = q.primitive_integer();
        assert_eq!(ints, vec![BigInt::from(-2), BigInt::from(3)]);
        assert_eq!(scale, rat(1, 4));
    }

    #[test]
    fn square_free_part() {
        let q = p(&[1, 1]).pow(3) * p(&[-2, 1]);
        assert_eq!(q.square_free(), p(&[1, 1]) * p(&[-2, 1]));
    }
}
