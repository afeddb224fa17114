//! Exact rational scalars and univariate polynomial algebra.

mod bivariate;
mod laurent;
mod parse;
mod poly;
mod resultant;
mod roots;
mod surd;

use num_bigint::BigInt;
use num_traits::One;

pub use bivariate::{interpolate, BiPoly};
pub use laurent::{compose, LaurentPolynomial};
pub use parse::{parse_laurent, parse_polynomial, parse_rational};
pub use poly::Polynomial;
pub use resultant::resultant;
pub use roots::rational_roots;
pub use surd::{sqrt_rational, surd_pow, Sqrt, Surd, SurdLaurent};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^e` for any integer exponent; `0^e` for negative `e` panics.
pub fn rational_pow(base: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    let b = if e < 0 { base.recip() } else { base.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    acc
}


/// Serde adapter writing a rational as `"p/q"` (or `"n"` when integral).
pub mod rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
