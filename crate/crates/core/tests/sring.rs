use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use sunit::exactmath::{rat, rational_pow, Rational};
use sunit::sring::{prime_support, rational_nth_root, SUnitRing};

fn ring() -> impl Strategy<Value = SUnitRing> {
    prop::sample::subsequence(vec![2u64, 3, 5, 7, 11], 0..=3).prop_map(|ps| SUnitRing::new(ps).unwrap())
}

/// S-unit test by repeated division, independent of the factorization code.
fn divides_out(ring: &SUnitRing, x: &Rational) -> bool {
    if x.is_zero() {
        return false;
    }
    let mut parts = [x.numer().clone(), x.denom().clone()];
    for n in &mut parts {
        if *n < BigInt::zero() {
            *n = -n.clone();
        }
        for &p in ring.primes() {
            let p = BigInt::from(p);
            while (&*n % &p).is_zero() {
                *n /= &p;
            }
        }
    }
    parts.iter().all(|n| n.is_one())
}

#[test]
fn parses_prime_lists() {
    let r: SUnitRing = "3, 2".parse().unwrap();
    assert_eq!(r.primes(), &[2, 3]);
    assert_eq!(r.to_string(), "{2,3}");
    assert!("none".parse::<SUnitRing>().unwrap().primes().is_empty());
    assert!("2,4".parse::<SUnitRing>().is_err());
}

#[test]
fn prime_support_examples() {
    assert_eq!(prime_support(&BigInt::from(-360)).primes, vec![2, 3, 5]);
    assert!(prime_support(&BigInt::one()).primes.is_empty());
}

proptest! {
    #[test]
    fn unit_enumeration(r in ring(), b in 0u32..=3) {
        let units = r.enumerate_units(b);
        let want = 2 * (2 * b as usize + 1).pow(r.primes().len() as u32);
        prop_assert_eq!(units.len(), want);
        prop_assert_eq!(units.iter().collect::<BTreeSet<_>>().len(), want);
        for u in &units {
            prop_assert!(divides_out(&r, u));
            prop_assert!(r.is_s_unit(u));
            let f = r.s_factor(u).unwrap();
            prop_assert!(f.exponents.iter().all(|e| e.unsigned_abs() <= b as u64));
        }
    }

    #[test]
    fn factorization_reconstructs(r in ring(), n in -5000i64..5000, d in 1i64..5000) {
        let x = rat(n, d);
        prop_assume!(!x.is_zero());
        let f = r.s_factor(&x).unwrap();
        prop_assert_eq!(f.value(&r), x.clone());
        prop_assert_eq!(r.is_s_unit(&x), divides_out(&r, &x));
        let den_ok = divides_out(&r, &Rational::from_integer(x.denom().clone()));
        prop_assert_eq!(r.is_s_integer(&x), den_ok);
    }

    #[test]
    fn nth_roots(n in -30i64..30, d in 1i64..30, k in prop::sample::select(vec![-3i64, -2, 2, 3, 5])) {
        let base = rat(n, d);
        prop_assume!(!base.is_zero());
        let x = rational_pow(&base, k);
        let root = rational_nth_root(&x, k).unwrap().expect("a perfect power");
        prop_assert_eq!(rational_pow(&root.root, k), x.clone());
        prop_assert_eq!(root.negative_also, k % 2 == 0);
        let shifted = &x + Rational::one();
        if let Ok(Some(r)) = rational_nth_root(&shifted, k) {
            prop_assert_eq!(rational_pow(&r.root, k), shifted);
        }
    }
}
