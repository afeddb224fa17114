use num_traits::{One, Zero};

use super::{rational_pow, Polynomial, Rational};

/// Resultant `lc(a)^deg(b) * prod b(alpha)` over the roots `alpha` of `a`,
/// computed by the Euclidean remainder sequence.
///
/// Zero exactly when `a` and `b` share a root over the algebraic closure.
/// Returns zero if either input is the zero polynomial.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Rational {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return Rational::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = Rational::one();
    loop {
        if db == 0 {
            return acc * rational_pow(b.leading_coeff().unwrap(), da as i64);
        }
        if da == 0 {
            return acc * rational_pow(a.leading_coeff().unwrap(), db as i64);
        }
        let r = a.rem(&b).expect("b is nonzero");
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= rational_pow(b.leading_coeff().unwrap(), (da - dr) as i64);
        a = b;
        da = db;
        b = r;
        db = dr;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn examples() {
        let a = Polynomial::from_ints(&[-4, 0, 1]);
        assert_eq!(resultant(&a, &Polynomial::from_ints(&[1, 1])), int(-3));
        assert_eq!(resultant(&Polynomial::from_ints(&[-2, 1]), &a), int(0));
        assert_eq!(
            resultant(&Polynomial::t(), &Polynomial::from_ints(&[1, 1])),
            int(1)
        );
    }

    #[test]
    fn antisymmetry_sign() {
        let a = Polynomial::from_ints(&[1, 2, 3]);
        let b = Polynomial::from_ints(&[5, 0, 0, 7]);
        // (-1)^(deg a * deg b) = +1 here
        assert_eq!(resultant(&a, &b), resultant(&b, &a));
        let c = Polynomial::from_ints(&[2, 1]);
        let d = Polynomial::from_ints(&[1, 0, 3, 1]);
        assert_eq!(resultant(&c, &d), -resultant(&d, &c));
    }
}
