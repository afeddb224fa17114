//! Exact rational roots without integer factorization.
//!
//! Degrees one and two are solved directly. Higher degrees go through a
//! Sturm sequence: real roots of the square-free part are isolated into
//! intervals narrower than `1 / lc^2`, where `lc` is the leading coefficient
//! of the primitive integer form. A rational root has a denominator dividing
//! `lc`, and two distinct fractions with denominators at most `lc` are at
//! least `1 / lc^2` apart, so the simplest fraction inside such an interval
//! is the only possible rational root there.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational};

/// Distinct rational roots of a nonzero polynomial, ascending.
///
/// The zero polynomial has no well-defined root set and returns an empty list.
pub fn rational_roots(p: &Polynomial) -> Vec<Rational> {
    if p.is_constant() {
        return Vec::new();
    }
    let (_, ints) = p.primitive_integer();
    let low = ints.iter().take_while(|c| c.is_zero()).count();
    let ints = &ints[low..];
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    match ints.len() {
        0 | 1 => {}
        2 => roots.push(Rational::new(-&ints[0], ints[1].clone())),
        3 => roots.extend(quadratic_roots(&ints[2], &ints[1], &ints[0])),
        _ => {
            let q = Polynomial::new(ints.iter().cloned().map(Rational::from_integer).collect());
            roots.extend(sturm_rational_roots(&q));
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn quadratic_roots(a: &BigInt, b: &BigInt, c: &BigInt) -> Vec<Rational> {
    let disc: BigInt = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return Vec::new();
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return Vec::new();
    }
    let two_a = BigInt::from(2) * a;
    let mut out = vec![
        Rational::new(-b - &s, two_a.clone()),
        Rational::new(-b + &s, two_a),
    ];
    out.sort();
    out.dedup();
    out
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        // Only signs matter, so keep entries primitive to limit growth.
        let (scale, _) = r.primitive_integer();
        let prim = r.primitive();
        chain.push(if scale.is_positive() { -prim } else { prim });
    }
    chain
}

fn sign_changes(chain: &[Polynomial], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.evaluate(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn sturm_rational_roots(p: &Polynomial) -> Vec<Rational> {
    let sf = p.square_free();
    let (_, ints) = sf.primitive_integer();
    let lc = ints.last().expect("nonconstant").abs();
    let sf = Polynomial::new(ints.iter().cloned().map(Rational::from_integer).collect());
    let chain = sturm_chain(&sf);

    // Cauchy bound on the magnitude of every root.
    let bound = ints
        .iter()
        .map(|c| Rational::new(c.abs(), lc.clone()))
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::one();
    let width_target = Rational::new(BigInt::one(), &lc * &lc);

    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo < width_target {
            if sf.evaluate(&hi).is_zero() {
                out.push(hi);
            } else if let Some(x) = simplest_between(&lo, &hi) {
                if sf.evaluate(&x).is_zero() {
                    out.push(x);
                }
            }
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out
}

/// Fraction with the smallest denominator strictly inside `(lo, hi)`.
pub(crate) fn simplest_between(lo: &Rational, hi: &Rational) -> Option<Rational> {
    if lo >= hi {
        return None;
    }
    Some(simplest_open(lo, Some(hi)))
}

fn simplest_open(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let fl = lo.floor();
    let next = &fl + Rational::one();
    match hi {
        None => next,
        Some(h) if &next < h => {
            // Nearest integer to zero inside the interval.
            if lo.is_negative() && h.is_positive() {
                Rational::zero()
            } else if h.is_positive() || h.is_zero() {
                next
            } else {
                let c = h.ceil() - Rational::one();
                if &c > lo {
                    c
                } else {
                    next
                }
            }
        }
        Some(h) => {
            let frac_hi = h - &fl;
            let frac_lo = lo - &fl;
            let inner_lo = frac_hi.recip();
            let inner = if frac_lo.is_zero() {
                simplest_open(&inner_lo, None)
            } else {
                simplest_open(&inner_lo, Some(&frac_lo.recip()))
            };
            fl + inner.recip()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn examples() {
        let p = Polynomial::from_ints(&[1, -5, 6]);
        assert_eq!(rational_roots(&p), vec![rat(1, 3), rat(1, 2)]);
        assert_eq!(rational_roots(&Polynomial::from_ints(&[-4, 0, 1])), vec![int(-2), int(2)]);
        assert!(rational_roots(&Polynomial::from_ints(&[-5, 0, 1])).is_empty());
    }

    #[test]
    fn higher_degree_uses_isolation() {
        // (2t - 3)(t + 5)(3t^2 - 7)(t^2 + 1)
        let p = Polynomial::from_ints(&[-3, 2])
            * Polynomial::from_ints(&[5, 1])
            * Polynomial::from_ints(&[-7, 0, 3])
            * Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(rational_roots(&p), vec![int(-5), rat(3, 2)]);
        // repeated and zero roots
        let q = Polynomial::from_ints(&[0, 0, 1]) * Polynomial::from_ints(&[1, 7]).pow(3);
        assert_eq!(rational_roots(&q), vec![rat(-1, 7), int(0)]);
    }

    #[test]
    fn close_roots_are_separated() {
        // roots 100/101 and 99/100
        let p = Polynomial::from_ints(&[-100, 101]) * Polynomial::from_ints(&[-99, 100])
            * Polynomial::from_ints(&[1, 0, 0, 1]);
        assert_eq!(rational_roots(&p), vec![int(-1), rat(99, 100), rat(100, 101)]);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), Some(rat(2, 5)));
        assert_eq!(simplest_between(&rat(-1, 2), &rat(7, 2)), Some(int(0)));
        assert_eq!(simplest_between(&rat(-9, 2), &rat(-7, 2)), Some(int(-4)));
        assert_eq!(simplest_between(&int(2), &rat(5, 2)), Some(rat(7, 3)));
        assert_eq!(simplest_between(&int(1), &int(1)), None);
    }
}
