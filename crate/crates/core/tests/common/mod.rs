//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sunit::exactmath::{Polynomial, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(r: &mut impl Rng) -> Rational {
    Rational::new(r.gen_range(-9i64..=9).into(), r.gen_range(1i64..=4).into())
}

pub fn nonzero_rational(r: &mut impl Rng) -> Rational {
    loop {
        let x = small_rational(r);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A polynomial of exactly degree `d`.
pub fn poly_of_degree(r: &mut impl Rng, d: usize) -> Polynomial {
    let mut c: Vec<Rational> = (0..d).map(|_| small_rational(r)).collect();
    c.push(nonzero_rational(r));
    Polynomial::new(c)
}

pub fn linear(r: &mut impl Rng) -> Polynomial {
    poly_of_degree(r, 1)
}

/// `c (t - r1)(t - r2)`.
pub fn quadratic_with_roots(c: &Rational, r1: &Rational, r2: &Rational) -> Polynomial {
    let lin = |x: &Rational| Polynomial::new(vec![-x.clone(), Rational::one()]);
    (&lin(r1) * &lin(r2)).scale(c)
}

pub fn root_of_linear(l: &Polynomial) -> Rational {
    -l.coeff(0) / l.coeff(1)
}

/// Linear `L1`, `L2` with `L1 / L2` nonconstant.
pub fn linear_pair(r: &mut impl Rng) -> (Polynomial, Polynomial) {
    loop {
        let (l1, l2) = (linear(r), linear(r));
        if root_of_linear(&l1) != root_of_linear(&l2) {
            return (l1, l2);
        }
    }
}

/// Coprime `f`, `g` of the given degrees.
pub fn coprime_pair(r: &mut impl Rng, df: usize, dg: usize) -> (Polynomial, Polynomial) {
    loop {
        let (f, g) = (poly_of_degree(r, df), poly_of_degree(r, dg));
        if f.gcd(&g).is_constant() {
            return (f, g);
        }
    }
}
