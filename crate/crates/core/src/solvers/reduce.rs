use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::UnitEquation;
use crate::error::Result;
use crate::exactmath::{resultant, Polynomial, Rational};
use crate::sring::{prime_support, PrimeSupport, SUnitRing};

/// The equation after removing common factors, and what it costs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub equation: UnitEquation,
    /// `gcd(f, g, h)`, divided out of all three. At its zeros every `(u, v)`
    /// is a solution of the original equation.
    pub common_all: Polynomial,
    /// `gcd(f, g)` after the first step, divided out of `f` and `g` only.
    pub d: Polynomial,
    /// Primes that must lie in `S` for `(t, u, v) -> (t, u d(t), v d(t))` to
    /// send solutions to solutions of the reduced equation.
    pub required_primes: PrimeSupport,
}

impl Reduction {
    pub fn missing_primes(&self, ring: &SUnitRing) -> Vec<u64> {
        self.required_primes.primes.iter().copied().filter(|&p| !ring.contains(p)).collect()
    }

    /// Image of a solution of the original equation, or `None` at a zero of
    /// `common_all`.
    pub fn map_solution(&self, t: &Rational, u: &Rational, v: &Rational) -> Option<(Rational, Rational, Rational)> {
        if self.common_all.evaluate(t).is_zero() {
            return None;
        }
        let dt = self.d.evaluate(t);
        Some((t.clone(), u * &dt, v * &dt))
    }
}

/// Splits off `e = gcd(f, g, h)`, then `d = gcd(f/e, g/e)`, giving
/// `f' = f/(e d)`, `g' = g/(e d)`, `h' = h/e`.
///
/// With the equation scaled to integer coefficients and `d` taken primitive,
/// `d(t)` divides both `h'(t)` and the resultant `Res(h', d)` at S-integral
/// `t`, so it is an S-unit once `S` contains the primes of that resultant and
/// of the leading coefficient of `d`.
pub fn reduce_common_factor(f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Result<Reduction> {
    UnitEquation::new(f.clone(), g.clone(), h.clone())?;
    let e = f.gcd(g).gcd(h);
    let div = |p: &Polynomial, q: &Polynomial| p.exact_div(q).map(|r| r.expect("gcd divides"));
    let (f1, g1, h1) = (div(f, &e)?, div(g, &e)?, div(h, &e)?);
    let d = f1.gcd(&g1);
    let (f2, g2) = (div(&f1, &d)?, div(&g1, &d)?);

    let required_primes = if d.is_constant() {
        PrimeSupport::default()
    } else {
        let n = common_denominator(&[&f1, &g1, &h1]);
        let scaled_h = h1.scale(&Rational::from_integer(n));
        let d_int = d.primitive();
        let res = resultant(&scaled_h, &d_int);
        debug_assert!(res.is_integer() && !res.is_zero());
        let lc = d_int.leading_coeff().unwrap().to_integer();
        prime_support(&(res.to_integer() * lc))
    };

    Ok(Reduction {
        equation: UnitEquation::new(f2, g2, h1)?,
        common_all: e,
        d,
        required_primes,
    })
}

fn common_denominator(ps: &[&Polynomial]) -> BigInt {
    ps.iter()
        .flat_map(|p| p.coeffs())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Whether the largest of the three degrees is attained by exactly one of
/// `f`, `g`, `h`.
pub fn check_degree_dominance(eq: &UnitEquation) -> bool {
    eq.dominant_degree_unique()
}

/// When the degree is dominant: primes that `S` must contain for every
/// solution with `t` rational to have `t` an S-integer, namely those of the
/// dominant leading coefficient once the equation has integer coefficients.
pub fn dominance_primes(eq: &UnitEquation) -> Option<PrimeSupport> {
    if !eq.dominant_degree_unique() {
        return None;
    }
    let polys = [eq.f(), eq.g(), eq.h()];
    let dominant = polys.iter().max_by_key(|p| p.degree()).unwrap();
    let n = common_denominator(&polys);
    let lc = dominant.leading_coeff().unwrap() * Rational::from_integer(n);
    Some(prime_support(&lc.to_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn strips_gcd_of_f_and_g() {
        let r = reduce_common_factor(&p("t^2+t"), &p("t^2+2*t"), &p("t+3")).unwrap();
        assert_eq!(r.d, p("t"));
        assert_eq!(r.equation.f(), &p("t+1"));
        assert_eq!(r.equation.g(), &p("t+2"));
        assert_eq!(r.equation.h(), &p("t+3"));
        assert_eq!(r.required_primes.primes, vec![3]);
    }

    #[test]
    fn coprime_is_identity() {
        let r = reduce_common_factor(&p("t"), &p("t+1"), &p("t^2-4")).unwrap();
        assert!(r.d.is_constant() && r.common_all.is_constant());
        assert!(r.required_primes.primes.is_empty());
    }

    #[test]
    fn common_zero_of_all_three_first() {
        let r = reduce_common_factor(&p("t"), &p("t"), &p("t")).unwrap();
        assert_eq!(r.common_all, p("t"));
        assert!(r.equation.coprime());
        assert_eq!(r.equation.h(), &p("1"));
    }

    #[test]
    fn dominance() {
        let eq = |f, g, h| UnitEquation::new(p(f), p(g), p(h)).unwrap();
        assert!(check_degree_dominance(&eq("t", "t+1", "t^2-4")));
        assert!(!check_degree_dominance(&eq("t^2", "t+1", "t^2-4")));
        assert!(!check_degree_dominance(&eq("t", "t+1", "2*t+3")));
        let primes = dominance_primes(&eq("t", "t+1", "6*t^2-1/5")).unwrap();
        assert_eq!(primes.primes, vec![2, 3, 5]);
    }
}
