use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{Polynomial, Rational};

/// `f(t) u + g(t) v = h(t)` with its structural flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitEquation {
    f: Polynomial,
    g: Polynomial,
    h: Polynomial,
    coprime: bool,
    degree_sum_matches: bool,
    dominant_degree_unique: bool,
}

impl UnitEquation {
    pub fn new(f: Polynomial, g: Polynomial, h: Polynomial) -> Result<Self> {
        if f.is_zero() || g.is_zero() || h.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (m, n, k) = (f.degree().unwrap(), g.degree().unwrap(), h.degree().unwrap());
        let top = m.max(n).max(k);
        Ok(UnitEquation {
            coprime: f.gcd(&g).is_constant(),
            degree_sum_matches: m + n == k,
            dominant_degree_unique: [m, n, k].iter().filter(|&&d| d == top).count() == 1,
            f,
            g,
            h,
        })
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    /// `gcd(f, g) = 1`.
    pub fn coprime(&self) -> bool {
        self.coprime
    }

    /// `deg f + deg g = deg h`.
    pub fn degree_sum_matches(&self) -> bool {
        self.degree_sum_matches
    }

    /// The largest of `deg f`, `deg g`, `deg h` is attained exactly once. In
    /// that case every solution has `t` an S-integer once `S` contains the
    /// primes of the leading coefficients, so `t` may range over all of `Q`.
    pub fn dominant_degree_unique(&self) -> bool {
        self.dominant_degree_unique
    }

    /// The equation with `f`, `g` (and so `u`, `v`) exchanged.
    pub fn swapped(&self) -> Self {
        UnitEquation::new(self.g.clone(), self.f.clone(), self.h.clone()).expect("nonzero")
    }

    pub fn residual(&self, t: &Rational, u: &Rational, v: &Rational) -> Rational {
        self.f.evaluate(t) * u + self.g.evaluate(t) * v - self.h.evaluate(t)
    }

    pub fn is_satisfied(&self, t: &Rational, u: &Rational, v: &Rational) -> bool {
        num_traits::Zero::is_zero(&self.residual(t, u, v))
    }

    /// `t` is a zero of `f g h`.
    pub fn is_trivial_point(&self, t: &Rational) -> bool {
        [&self.f, &self.g, &self.h]
            .iter()
            .any(|p| num_traits::Zero::is_zero(&p.evaluate(t)))
    }
}
