use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::forward_owned;
use super::{resultant, Polynomial, Rational};

/// Polynomial in two unknowns `x`, `y`, stored as a polynomial in `y` whose
/// coefficients are polynomials in `x`.
///
/// Only what elimination needs: ring operations, partial evaluation, and the
/// resultant with respect to `y` (computed by evaluation and interpolation in
/// `x`, so all heavy lifting stays univariate).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    coeffs: Vec<Polynomial>,
}

impl BiPoly {
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        let mut b = BiPoly { coeffs };
        while b.coeffs.last().is_some_and(|c| c.is_zero()) {
            b.coeffs.pop();
        }
        b
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![Polynomial::constant(c)])
    }

    pub fn x() -> Self {
        Self::new(vec![Polynomial::t()])
    }

    pub fn y() -> Self {
        Self::new(vec![Polynomial::zero(), Polynomial::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Polynomial::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.degree().map(|d| d + j))
            .max()
    }

    /// Coefficient of `y^j`, a polynomial in `x`.
    pub fn coeff_y(&self, j: usize) -> Polynomial {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Substitutes `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.evaluate(x)).collect())
    }

    /// Substitutes `y`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y: &Rational) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(y) + c;
        }
        acc
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_x(x).evaluate(y)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// Resultant with respect to `y`, as a polynomial in `x`.
    ///
    /// Both inputs must have positive `y`-degree or the caller must handle the
    /// degenerate case (the resultant of two `y`-constants is 1 by convention
    /// and says nothing about common zeros).
    pub fn resultant_y(&self, other: &BiPoly) -> Polynomial {
        let (Some(da), Some(db)) = (self.degree_y(), other.degree_y()) else {
            return Polynomial::zero();
        };
        let ax = self.degree_x().unwrap_or(0);
        let bx = other.degree_x().unwrap_or(0);
        let bound = da * bx + db * ax;
        let lca = &self.coeffs[da];
        let lcb = &other.coeffs[db];

        let mut xs = Vec::with_capacity(bound + 1);
        let mut ys = Vec::with_capacity(bound + 1);
        let mut k: i64 = 0;
        while xs.len() <= bound {
            // 0, 1, -1, 2, -2, ...
            let x = Rational::from_integer(BigInt::from(if k % 2 == 1 { (k + 1) / 2 } else { -k / 2 }));
            k += 1;
            if lca.evaluate(&x).is_zero() || lcb.evaluate(&x).is_zero() {
                continue;
            }
            ys.push(resultant(&self.eval_x(&x), &other.eval_x(&x)));
            xs.push(x);
        }
        interpolate(&xs, &ys)
    }
}

/// Newton interpolation through `(xs[i], ys[i])`; the `xs` must be distinct.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        let factor = Polynomial::new(vec![-xs[i].clone(), Rational::from_integer(1.into())]);
        acc = &(&acc * &factor) + &Polynomial::constant(dd[i].clone());
    }
    acc
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff_y(j) + &rhs.coeff_y(j)).collect())
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff_y(j) - &rhs.coeff_y(j)).collect())
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Polynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_owned!(BiPoly, Add add, Sub sub, Mul mul);
