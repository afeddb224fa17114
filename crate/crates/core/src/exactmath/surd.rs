use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LaurentPolynomial, Polynomial, Rational};

/// Exact square root of a rational: either rational, or `coeff * sqrt(radicand)`
/// with `radicand` a non-square integer (square factors below a small trial
/// bound pulled out).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sqrt {
    Rational(Rational),
    Irrational { coeff: Rational, radicand: BigInt },
}

pub fn sqrt_rational(x: &Rational) -> Sqrt {
    // sqrt(n/d) = sqrt(n*d)/d
    let nd = x.numer() * x.denom();
    let (s, rad) = split_square(&nd.abs());
    let coeff = Rational::new(s, x.denom().clone());
    let rad = if nd.is_negative() { -rad } else { rad };
    if rad.is_one() {
        Sqrt::Rational(coeff)
    } else if rad.is_zero() {
        Sqrt::Rational(Rational::zero())
    } else {
        Sqrt::Irrational {
            coeff,
            radicand: rad,
        }
    }
}

/// `n = s^2 * r`, extracting square factors by trial division (bounded) and
/// testing the remainder for being a perfect square.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut s = BigInt::one();
    let mut r = n.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(10_000);
    while p <= limit && &p * &p <= r {
        let pp = &p * &p;
        while (&r % &pp).is_zero() {
            r /= &pp;
            s *= &p;
        }
        p += 1;
    }
    let root = r.sqrt();
    if &root * &root == r {
        return (s * root, BigInt::one());
    }
    (s, r)
}

/// Element `rational + irrational * sqrt(radicand)` of a quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub rational: Rational,
    pub irrational: Rational,
}

impl Surd {
    pub fn from_rational(r: Rational) -> Self {
        Surd {
            rational: r,
            irrational: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irrational.is_zero()
    }

    pub fn add(&self, o: &Surd) -> Surd {
        Surd {
            rational: &self.rational + &o.rational,
            irrational: &self.irrational + &o.irrational,
        }
    }

    pub fn neg(&self) -> Surd {
        Surd {
            rational: -&self.rational,
            irrational: -&self.irrational,
        }
    }

    pub fn scale(&self, c: &Rational) -> Surd {
        Surd {
            rational: &self.rational * c,
            irrational: &self.irrational * c,
        }
    }

    pub fn mul(&self, o: &Surd, radicand: &BigInt) -> Surd {
        let d = Rational::from_integer(radicand.clone());
        Surd {
            rational: &self.rational * &o.rational + &self.irrational * &o.irrational * d,
            irrational: &self.rational * &o.irrational + &self.irrational * &o.rational,
        }
    }

    /// `1 / self` via the conjugate; `None` for zero. The radicand must not
    /// be a perfect square.
    pub fn recip(&self, radicand: &BigInt) -> Option<Surd> {
        let d = Rational::from_integer(radicand.clone());
        let norm = &self.rational * &self.rational - &self.irrational * &self.irrational * d;
        if norm.is_zero() {
            return None;
        }
        Some(Surd {
            rational: &self.rational / &norm,
            irrational: -&self.irrational / &norm,
        })
    }

    pub fn display(&self, radicand: &BigInt) -> String {
        fmt_pair(&self.rational.to_string(), &self.irrational, radicand, self.rational.is_zero())
    }
}

fn fmt_pair(rational: &str, irr: &Rational, radicand: &BigInt, rational_zero: bool) -> String {
    if irr.is_zero() {
        return rational.to_string();
    }
    let root = format!("sqrt({radicand})");
    let irr_part = if irr.is_one() {
        root
    } else if (-irr).is_one() {
        format!("-{root}")
    } else {
        format!("{irr}*{root}")
    };
    if rational_zero {
        irr_part
    } else {
        format!("({rational}) + ({irr_part})")
    }
}

/// Laurent polynomial over `Q(sqrt(radicand))`, stored as
/// `rational + sqrt(radicand) * irrational`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdLaurent {
    pub rational: LaurentPolynomial,
    pub irrational: LaurentPolynomial,
}

impl SurdLaurent {
    pub fn from_rational(r: LaurentPolynomial) -> Self {
        SurdLaurent {
            rational: r,
            irrational: LaurentPolynomial::zero(),
        }
    }

    pub fn constant(c: &Surd) -> Self {
        SurdLaurent {
            rational: LaurentPolynomial::constant(c.rational.clone()),
            irrational: LaurentPolynomial::constant(c.irrational.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        SurdLaurent {
            rational: &self.rational + &o.rational,
            irrational: &self.irrational + &o.irrational,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        SurdLaurent {
            rational: &self.rational - &o.rational,
            irrational: &self.irrational - &o.irrational,
        }
    }

    pub fn mul(&self, o: &Self, radicand: &BigInt) -> Self {
        let d = Rational::from_integer(radicand.clone());
        SurdLaurent {
            rational: &(&self.rational * &o.rational) + &(&self.irrational * &o.irrational).scale(&d),
            irrational: &(&self.rational * &o.irrational) + &(&self.irrational * &o.rational),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        SurdLaurent {
            rational: self.rational.shift(k),
            irrational: self.irrational.shift(k),
        }
    }

    /// `outer(self)` for a rational outer polynomial.
    pub fn compose_into(outer: &Polynomial, inner: &Self, radicand: &BigInt) -> Self {
        let mut acc = SurdLaurent::from_rational(LaurentPolynomial::zero());
        for c in outer.coeffs().iter().rev() {
            acc = acc
                .mul(inner, radicand)
                .add(&SurdLaurent::from_rational(LaurentPolynomial::constant(c.clone())));
        }
        acc
    }

    pub fn display(&self, radicand: &BigInt) -> String {
        let r = self.rational.to_string();
        if self.irrational.is_zero() {
            return r;
        }
        let root = format!("sqrt({radicand})");
        let irr = format!("{root}*({})", self.irrational);
        if self.rational.is_zero() {
            irr
        } else {
            format!("{r} + {irr}")
        }
    }

    /// Evaluates both parts at a rational point.
    pub fn evaluate(&self, x: &Rational) -> crate::Result<Surd> {
        Ok(Surd {
            rational: self.rational.evaluate(x)?,
            irrational: self.irrational.evaluate(x)?,
        })
    }
}

impl fmt::Display for Sqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sqrt::Rational(r) => write!(f, "{r}"),
            Sqrt::Irrational { coeff, radicand } => {
                f.write_str(&fmt_pair("0", coeff, radicand, true))
            }
        }
    }
}

/// `base^e` for a surd, used when scaling parameters.
pub fn surd_pow(base: &Surd, e: u32, radicand: &BigInt) -> Surd {
    let d = Rational::from_integer(radicand.clone());
    let mut acc = Surd::from_rational(Rational::one());
    for _ in 0..e {
        acc = Surd {
            rational: &acc.rational * &base.rational + &acc.irrational * &base.irrational * &d,
            irrational: &acc.rational * &base.irrational + &acc.irrational * &base.rational,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_rational(&int(4)), Sqrt::Rational(int(2)));
        assert_eq!(sqrt_rational(&rat(9, 4)), Sqrt::Rational(rat(3, 2)));
        assert_eq!(
            sqrt_rational(&int(12)),
            Sqrt::Irrational {
                coeff: int(2),
                radicand: BigInt::from(3)
            }
        );
        // sqrt(1/2) = sqrt(2)/2
        assert_eq!(
            sqrt_rational(&rat(1, 2)),
            Sqrt::Irrational {
                coeff: rat(1, 2),
                radicand: BigInt::from(2)
            }
        );
    }

    #[test]
    fn surd_arithmetic_squares_the_root() {
        let rad = BigInt::from(5);
        let root = SurdLaurent {
            rational: LaurentPolynomial::zero(),
            irrational: LaurentPolynomial::one(),
        };
        let sq = root.mul(&root, &rad);
        assert_eq!(sq, SurdLaurent::from_rational(LaurentPolynomial::constant(int(5))));
    }
}
