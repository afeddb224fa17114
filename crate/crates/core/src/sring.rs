//! S-integers and S-units over the rationals.
//!
//! With `k = Q` the finite places are primes and the only archimedean place is
//! the real one, so `S` is just a finite set of primes. An S-unit is
//! `± prod p_i^e_i` over the primes of `S`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{rational_pow, Rational};

/// A finite set of rational primes, sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SUnitRing {
    primes: Vec<u64>,
}

impl SUnitRing {
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        for &p in &primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p.to_string()));
            }
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(SUnitRing { primes })
    }

    /// The ring with no finite primes: units are `±1`.
    pub fn empty() -> Self {
        SUnitRing { primes: Vec::new() }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn with_primes<I: IntoIterator<Item = u64>>(&self, extra: I) -> Result<Self> {
        Self::new(self.primes.iter().copied().chain(extra))
    }

    pub fn s_factor(&self, x: &Rational) -> Result<SFactorization> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut num = x.numer().abs();
        let mut den = x.denom().clone();
        let mut exponents = Vec::with_capacity(self.primes.len());
        for &p in &self.primes {
            let p = BigInt::from(p);
            let up = strip(&mut num, &p);
            let down = strip(&mut den, &p);
            exponents.push(up - down);
        }
        Ok(SFactorization {
            sign: if x.is_negative() { -1 } else { 1 },
            exponents,
            residual: Rational::new(num, den),
        })
    }

    /// Denominator supported on `S`. Zero counts as an S-integer.
    pub fn is_s_integer(&self, x: &Rational) -> bool {
        let mut den = x.denom().clone();
        for &p in &self.primes {
            strip(&mut den, &BigInt::from(p));
        }
        den.is_one()
    }

    pub fn is_s_unit(&self, x: &Rational) -> bool {
        match self.s_factor(x) {
            Ok(f) => f.residual.is_one(),
            Err(_) => false,
        }
    }

    /// All `± prod p_i^e_i` with `|e_i| <= bound`, exponent vectors in
    /// lexicographic order and `+` before `-` within each vector.
    pub fn enumerate_units(&self, bound: u32) -> Vec<Rational> {
        let b = bound as i64;
        let k = self.primes.len();
        let side = (2 * b + 1) as usize;
        let total = side.pow(k as u32);
        let mut out = Vec::with_capacity(2 * total);
        let mut exps = vec![-b; k];
        for _ in 0..total {
            let mut v = Rational::one();
            for (&p, &e) in self.primes.iter().zip(&exps) {
                v *= rational_pow(&Rational::from_integer(BigInt::from(p)), e);
            }
            out.push(v.clone());
            out.push(-v);
            // odometer, last prime fastest
            for i in (0..k).rev() {
                if exps[i] < b {
                    exps[i] += 1;
                    break;
                }
                exps[i] = -b;
            }
        }
        out
    }
}

fn strip(n: &mut BigInt, p: &BigInt) -> i64 {
    let mut e = 0;
    if n.is_zero() {
        return 0;
    }
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        *n = q;
        e += 1;
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for SUnitRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Parses `2,3,5` or `none`.
impl FromStr for SUnitRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.eq_ignore_ascii_case("none") {
            return Ok(Self::empty());
        }
        let mut primes = Vec::new();
        let mut column = 1;
        for part in s.split(',') {
            let trimmed = part.trim();
            let p: u64 = trimmed.parse().map_err(|_| Error::Parse {
                line: 1,
                column,
                message: format!("`{trimmed}` is not a prime number"),
            })?;
            primes.push(p);
            column += part.chars().count() + 1;
        }
        Self::new(primes)
    }
}

/// `sign * prod p_i^e_i * residual` with `residual` positive and coprime to `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFactorization {
    pub sign: i8,
    pub exponents: Vec<i64>,
    pub residual: Rational,
}

impl SFactorization {
    pub fn value(&self, ring: &SUnitRing) -> Rational {
        let mut v = self.residual.clone();
        for (&p, &e) in ring.primes().iter().zip(&self.exponents) {
            v *= rational_pow(&Rational::from_integer(BigInt::from(p)), e);
        }
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }
}

/// A rational `n`-th root `root`; for even `n`, `-root` is a root as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NthRoot {
    pub root: Rational,
    pub negative_also: bool,
}

/// Rational `r` with `r^n = x`, positive root preferred.
pub fn rational_nth_root(x: &Rational, n: i64) -> Result<Option<NthRoot>> {
    if x.is_zero() || n == 0 {
        return Err(Error::ZeroInput);
    }
    let target = if n < 0 { x.recip() } else { x.clone() };
    let k = n.unsigned_abs();
    let even = k.is_multiple_of(2);
    if even && target.is_negative() {
        return Ok(None);
    }
    let Some(k32) = k.to_u32() else {
        return Ok(None);
    };
    let num_root = target.numer().abs().nth_root(k32);
    let den_root = target.denom().nth_root(k32);
    if num_root.pow(k32) != target.numer().abs() || den_root.pow(k32) != *target.denom() {
        return Ok(None);
    }
    let mut root = Rational::new(num_root, den_root);
    if target.is_negative() {
        root = -root;
    }
    Ok(Some(NthRoot {
        root,
        negative_also: even,
    }))
}

/// Prime support of a nonzero integer, found by trial division. Anything left
/// after the trial bound is returned unfactored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct PrimeSupport {
    pub primes: Vec<u64>,
    pub unfactored: Option<String>,
}

pub fn prime_support(n: &BigInt) -> PrimeSupport {
    const TRIAL_LIMIT: u64 = 1_000_000;
    let mut n = n.abs();
    let mut primes = Vec::new();
    if n.is_zero() {
        return PrimeSupport::default();
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        if strip(&mut n, &bd) > 0 {
            primes.push(d);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut unfactored = None;
    if n > BigInt::one() {
        let bd = BigInt::from(d);
        // Trial division stopped below sqrt(n) only when the limit was hit.
        match n.to_u64() {
            Some(p) if &bd * &bd > n => primes.push(p),
            _ => unfactored = Some(n.to_string()),
        }
    }
    primes.sort_unstable();
    PrimeSupport { primes, unfactored }
}
