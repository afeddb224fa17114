use proptest::prelude::*;
use sunit::bezout::compute_cofactors;
use sunit::exactmath::{rat, Polynomial};
use sunit::Error;

fn poly_of_degree(d: usize) -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec((-9i64..=9, 1i64..=4), d), (1i64..=9, 1i64..=4), any::<bool>()).prop_map(|(low, (n, dd), neg)| {
        let mut c: Vec<_> = low.into_iter().map(|(n, d)| rat(n, d)).collect();
        c.push(rat(if neg { -n } else { n }, dd));
        Polynomial::new(c)
    })
}

fn instance() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (0usize..=6, 0usize..=6)
        .prop_flat_map(|(df, dg)| (poly_of_degree(df), poly_of_degree(dg), poly_of_degree(df + dg)))
        .prop_filter("coprime", |(f, g, _)| f.gcd(g).is_constant())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn identity_and_canonical_degrees((f, g, h) in instance()) {
        let c = compute_cofactors(&f, &g, &h).unwrap();
        prop_assert_eq!(&(&f * &c.gtilde) + &(&g * &c.ftilde), h);
        let deg = |p: &Polynomial| p.degree().map_or(-1, |d| d as i64);
        prop_assert!(deg(&c.ftilde) < deg(&f) || c.ftilde.is_zero());
        prop_assert!(deg(&c.gtilde) <= deg(&g));
    }

    #[test]
    fn common_zero_is_rejected((f, g, h) in instance(), r in -5i64..=5) {
        let lin = Polynomial::from_ints(&[-r, 1]);
        let err = compute_cofactors(&(&f * &lin), &(&g * &lin), &h).unwrap_err();
        prop_assert!(matches!(err, Error::CommonZero(_)));
    }
}

/// The pair is unique up to `(f~, g~) -> (f~ + l f, g~ - l g)`, so no
/// representative has `deg f~ < deg f - 1` when the canonical one has
/// `deg f~ = deg f - 1`; this pins the counterexample to the swapped bounds.
#[test]
fn swapped_bounds_counterexample() {
    let (f, g, h): (Polynomial, Polynomial, Polynomial) =
        ("t^3".parse().unwrap(), "1".parse().unwrap(), "t^3 + t^2".parse().unwrap());
    let c = compute_cofactors(&f, &g, &h).unwrap();
    assert_eq!(c.ftilde, "t^2".parse().unwrap());
    assert_eq!(c.gtilde, "1".parse().unwrap());
}
