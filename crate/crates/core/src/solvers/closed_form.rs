use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::UnitEquation;
use crate::error::{Error, Result};
use crate::exactmath::{sqrt_rational, LaurentPolynomial, Polynomial, Rational, Sqrt, Surd, SurdLaurent};
use crate::families::{
    verify_family, verify_surd_family, EmittedFamily, FamilyBody, ParameterDomain, Provenance, SolutionFamily,
    SurdFamily,
};
use crate::sring::SUnitRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadraticCase {
    Generic,
    PerfectSquare,
    ProductForm,
    /// Both special shapes at once; the extra families of each are emitted.
    PerfectSquareAndProductForm,
}

/// A root of `Q`, rational or in `Q(sqrt(radicand))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootValue {
    Rational(Rational),
    Surd { value: Surd, radicand: BigInt },
}

impl fmt::Display for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootValue::Rational(r) => write!(f, "{r}"),
            RootValue::Surd { value, radicand } => f.write_str(&value.display(radicand)),
        }
    }
}

impl Serialize for RootValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticCaseAnalysis {
    pub case: QuadraticCase,
    #[serde(serialize_with = "as_text")]
    pub discriminant: Rational,
    pub r1: RootValue,
    pub r2: RootValue,
    /// `Q = alpha L1 L2 + beta` in the product-form cases.
    #[serde(serialize_with = "opt_text")]
    pub alpha: Option<Rational>,
    #[serde(serialize_with = "opt_text")]
    pub beta: Option<Rational>,
}

fn as_text<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn opt_text<S: Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

/// Families from one of the closed-form constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<QuadraticCaseAnalysis>,
    pub families: Vec<EmittedFamily>,
    pub diagnostics: Vec<String>,
}

struct Linear {
    c1: Rational,
    c0: Rational,
}

fn linear(p: &Polynomial, name: &str) -> Result<Linear> {
    if p.degree() != Some(1) {
        return Err(Error::Degenerate(format!("{name} = {p} is not linear")));
    }
    Ok(Linear {
        c1: p.coeff(1),
        c0: p.coeff(0),
    })
}

/// `r(t) = c * t + shift` as a Laurent polynomial over `Q(sqrt d)`.
fn affine(c: &Surd, shift: &Surd) -> SurdLaurent {
    SurdLaurent {
        rational: LaurentPolynomial::from_terms([(1, c.rational.clone()), (0, shift.rational.clone())]),
        irrational: LaurentPolynomial::from_terms([(1, c.irrational.clone()), (0, shift.irrational.clone())]),
    }
}

fn q(x: Rational) -> Surd {
    Surd::from_rational(x)
}

struct Emitter<'a> {
    eq: &'a UnitEquation,
    ring: &'a SUnitRing,
    provenance: Provenance,
    out: ClosedForm,
}

impl Emitter<'_> {
    #[allow(clippy::too_many_arguments)]
    fn emit(&mut self, label: &str, z: SurdLaurent, a: Surd, p: i64, b: Surd, q: i64, radicand: &BigInt, domain: ParameterDomain) {
        if a.is_zero() || b.is_zero() {
            self.out
                .diagnostics
                .push(format!("{label}: skipped, a coefficient vanishes so u or v would be 0"));
            return;
        }
        let rational = z.irrational.is_zero() && a.is_rational() && b.is_rational();
        let (body, ok, empty) = if rational {
            let fam = SolutionFamily::new(z.rational, a.rational, p, b.rational, q, domain, self.provenance);
            let ok = verify_family(&fam, self.eq);
            let empty = !(self.ring.is_s_unit(&fam.a) && self.ring.is_s_unit(&fam.b));
            (FamilyBody::Rational(fam), ok, empty)
        } else {
            let fam = SurdFamily {
                radicand: radicand.clone(),
                z,
                a,
                b,
                p,
                q,
                domain,
                provenance: self.provenance,
            };
            let ok = verify_surd_family(&fam, self.eq);
            (FamilyBody::Surd(fam), ok, false)
        };
        if !ok {
            self.out
                .diagnostics
                .push(format!("{label}: skipped, the identity does not hold (internal error)"));
            return;
        }
        let note = matches!(body, FamilyBody::Surd(_))
            .then(|| "coefficients are irrational; excluded from coverage over Q".to_string());
        self.out.families.push(EmittedFamily {
            label: label.to_string(),
            body,
            empty_over_ring: empty,
            note,
        });
    }

    fn skip(&mut self, label: &str, why: impl fmt::Display) {
        self.out.diagnostics.push(format!("{label}: skipped, {why}"));
    }
}

/// Families for `L1 u + L2 v = Q` with `L1`, `L2` linear and `Q` quadratic.
///
/// With `r1`, `r2` the roots of `Q` and `L1 = a1 t + a0`, `L2 = b1 t + b0`,
/// `Q = c2 t^2 + c1 t + c0`, `eta` an S-unit:
///
/// * `q1`: `t = (a1 b0 - a0 b1) eta / (c2 (b1 r1 + b0)) + r2`, `u = eta`,
///   `v = -(a1 r1 + a0) eta / (b1 r1 + b0)`;
/// * `q2`: the same with `r1` and `r2` exchanged;
/// * `q3`: `t = a1 eta / c2 + const`, `u = eta`, `v` constant;
/// * `q4`: `t = b1 eta / c2 + const`, `u` constant, `v = eta`;
/// * `q-square` when `Q` has a double root `r`:
///   `t = eta sqrt((a0 b1 - a1 b0)/(b1 c2)) + r`, `u = eta^2`, `v = -a1 eta^2 / b1`;
/// * `q-product-1`, `q-product-2` when `Q = alpha L1 L2 + beta`:
///   `t = a1 eta / c2 - b0 / b1`, `u = eta`, `v = K / eta` and the mirror
///   image, with `K = c2 (a1 b1 c0 - a0 b0 c2) / (a1 b1)^2`.
///
/// Families over `Q(sqrt D)` are emitted as surd records.
pub fn quadratic_families(l1: &Polynomial, l2: &Polynomial, quad: &Polynomial, ring: &SUnitRing) -> Result<ClosedForm> {
    let Linear { c1: a1, c0: a0 } = linear(l1, "L1")?;
    let Linear { c1: b1, c0: b0 } = linear(l2, "L2")?;
    if quad.degree() != Some(2) {
        return Err(Error::Degenerate(format!("Q = {quad} is not quadratic")));
    }
    let (c2, c1, c0) = (quad.coeff(2), quad.coeff(1), quad.coeff(0));
    let cross = &a1 * &b0 - &a0 * &b1;
    if cross.is_zero() {
        return Err(Error::Degenerate("L1/L2 is constant".into()));
    }
    let eq = UnitEquation::new(l1.clone(), l2.clone(), quad.clone())?;

    let disc = &c1 * &c1 - Rational::from_integer(4.into()) * &c2 * &c0;
    let (sqrt_d, radicand) = match sqrt_rational(&disc) {
        Sqrt::Rational(s) => (q(s), BigInt::one()),
        Sqrt::Irrational { coeff, radicand } => (
            Surd {
                rational: Rational::zero(),
                irrational: coeff,
            },
            radicand,
        ),
    };
    let two_c2 = Rational::from_integer(2.into()) * &c2;
    let r1 = q(-&c1 / &two_c2).add(&sqrt_d.scale(&two_c2.recip()));
    let r2 = q(-&c1 / &two_c2).add(&sqrt_d.neg().scale(&two_c2.recip()));

    let square = disc.is_zero();
    let alpha = &c2 / (&a1 * &b1);
    let product = c1 == &alpha * (&a1 * &b0 + &a0 * &b1);
    let case = match (square, product) {
        (false, false) => QuadraticCase::Generic,
        (true, false) => QuadraticCase::PerfectSquare,
        (false, true) => QuadraticCase::ProductForm,
        (true, true) => QuadraticCase::PerfectSquareAndProductForm,
    };
    let root_value = |r: &Surd| {
        if r.is_rational() {
            RootValue::Rational(r.rational.clone())
        } else {
            RootValue::Surd {
                value: r.clone(),
                radicand: radicand.clone(),
            }
        }
    };
    let analysis = QuadraticCaseAnalysis {
        case,
        discriminant: disc.clone(),
        r1: root_value(&r1),
        r2: root_value(&r2),
        alpha: product.then(|| alpha.clone()),
        beta: product.then(|| &c0 - &alpha * &a0 * &b0),
    };

    let mut em = Emitter {
        eq: &eq,
        ring,
        provenance: Provenance::ClosedFormQuadratic,
        out: ClosedForm {
            analysis: Some(analysis),
            families: Vec::new(),
            diagnostics: Vec::new(),
        },
    };
    let units = ParameterDomain::SUnits;
    let one = q(Rational::one());

    for (label, ra, rb) in [("q1", &r1, &r2), ("q2", &r2, &r1)] {
        let den = q(b1.clone()).mul(ra, &radicand).add(&q(b0.clone()));
        let Some(inv) = den.recip(&radicand) else {
            em.skip(label, format_args!("the root {} of Q is a root of L2", ra.display(&radicand)));
            continue;
        };
        let num_v = q(a1.clone()).mul(ra, &radicand).add(&q(a0.clone()));
        if num_v.is_zero() {
            em.skip(label, format_args!("the root {} of Q is a root of L1", ra.display(&radicand)));
            continue;
        }
        let slope = inv.scale(&(&cross / &c2));
        let b = num_v.mul(&inv, &radicand).neg();
        em.emit(label, affine(&slope, rb), one.clone(), 1, b, 1, &radicand, units);
    }

    let shift3 = (&a1 * &b1 * &c0 - &a1 * &b0 * &c1 + &a0 * &b0 * &c2) / (&c2 * &cross);
    let v3 = (&a1 * &a1 * &c0 - &a0 * &a1 * &c1 + &a0 * &a0 * &c2) / (&a1 * &cross);
    if v3.is_zero() {
        em.skip("q3", "the root of L1 is a root of Q, so v would be 0");
    } else {
        em.emit("q3", affine(&q(&a1 / &c2), &q(shift3)), one.clone(), 1, q(v3), 0, &radicand, units);
    }
    let shift4 = -(&a1 * &b1 * &c0 - &a0 * &b1 * &c1 + &a0 * &b0 * &c2) / (&c2 * &cross);
    let u4 = -(&b1 * &b1 * &c0 - &b0 * &b1 * &c1 + &b0 * &b0 * &c2) / (&b1 * &cross);
    if u4.is_zero() {
        em.skip("q4", "the root of L2 is a root of Q, so u would be 0");
    } else {
        em.emit("q4", affine(&q(&b1 / &c2), &q(shift4)), q(u4), 0, one.clone(), 1, &radicand, units);
    }

    if square {
        let r = r1.clone();
        let k = -&cross / (&b1 * &c2);
        let v = q(-&a1 / &b1);
        match sqrt_rational(&k) {
            Sqrt::Rational(s) => em.emit("q-square", affine(&q(s), &r), one.clone(), 2, v, 2, &BigInt::one(), units),
            Sqrt::Irrational { coeff, radicand: rad } => {
                let slope = Surd {
                    rational: Rational::zero(),
                    irrational: coeff,
                };
                em.emit("q-square", affine(&slope, &r), one.clone(), 2, v, 2, &rad, units);
                if let Some(last) = em.out.families.last_mut() {
                    last.note = Some(format!(
                        "coefficients are irrational; over Q the same curve is t = s + {}, u = s^2 / ({k}), v = -{} s^2 / ({k})",
                        r.rational,
                        &a1 / &b1
                    ));
                }
            }
        }
    }

    if product {
        let k = &c2 * (&a1 * &b1 * &c0 - &a0 * &b0 * &c2) / ((&a1 * &b1) * (&a1 * &b1));
        if k.is_zero() {
            em.skip("q-product-1", "Q is a multiple of L1 L2, so the constant would be 0");
            em.skip("q-product-2", "Q is a multiple of L1 L2, so the constant would be 0");
        } else {
            let z1 = affine(&q(&a1 / &c2), &q(-&b0 / &b1));
            em.emit("q-product-1", z1, one.clone(), 1, q(k.clone()), -1, &radicand, units);
            let z2 = affine(&q(&b1 / &c2), &q(-&a0 / &a1));
            em.emit("q-product-2", z2, q(k), -1, one, 1, &radicand, units);
        }
    }
    Ok(em.out)
}

/// Families for `L1 u + L2 v = L3` with all three linear, `t` an S-integer:
///
/// * `l1`: `t = (a0 b1 - a1 b0) eta / (b1 c1) - c0 / c1`, `u = eta`, `v = -a1 eta / b1`;
/// * `l2`: `t = (a1 c0 - a0 c1 - a1 b0 eta) / (a1 b1 eta)`, `u = c1 / a1`, `v = eta`;
/// * `l3`: `t = (b1 c0 - b0 c1 - a0 b1 eta) / (a1 b1 eta)`, `u = eta`, `v = c1 / b1`;
/// * `l-constant`: `t` any S-integer with the constant `(u, v)` solving
///   `L1 u + L2 v = L3` identically.
pub fn linear_families(l1: &Polynomial, l2: &Polynomial, l3: &Polynomial, ring: &SUnitRing) -> Result<ClosedForm> {
    let Linear { c1: a1, c0: a0 } = linear(l1, "L1")?;
    let Linear { c1: b1, c0: b0 } = linear(l2, "L2")?;
    if l3.degree().is_none_or(|d| d > 1) {
        return Err(Error::Degenerate(format!("L3 = {l3} is not linear")));
    }
    let (c1, c0) = (l3.coeff(1), l3.coeff(0));
    let cross = &a1 * &b0 - &a0 * &b1;
    if cross.is_zero() {
        return Err(Error::Degenerate("L1/L2 is constant".into()));
    }
    let eq = UnitEquation::new(l1.clone(), l2.clone(), l3.clone())?;
    let mut em = Emitter {
        eq: &eq,
        ring,
        provenance: Provenance::ClosedFormLinear,
        out: ClosedForm {
            analysis: None,
            families: Vec::new(),
            diagnostics: Vec::new(),
        },
    };
    let units = ParameterDomain::SUnits;
    let one = Surd::from_rational(Rational::one());
    let rational_z = |terms: Vec<(i64, Rational)>| SurdLaurent::from_rational(LaurentPolynomial::from_terms(terms));
    let d1 = BigInt::one();

    if c1.is_zero() {
        for label in ["l1", "l2", "l3"] {
            em.skip(label, "L3 is constant");
        }
    } else {
        let z1 = rational_z(vec![(1, -&cross / (&b1 * &c1)), (0, -&c0 / &c1)]);
        em.emit("l1", z1, one.clone(), 1, q(-&a1 / &b1), 1, &d1, units);

        let k2 = (&a1 * &c0 - &a0 * &c1) / (&a1 * &b1);
        if k2.is_zero() {
            em.skip("l2", "L3 is a multiple of L1, so t is the constant root of L2");
        } else {
            let z2 = rational_z(vec![(-1, k2), (0, -&b0 / &b1)]);
            em.emit("l2", z2, q(&c1 / &a1), 0, one.clone(), 1, &d1, units);
        }
        let k3 = (&b1 * &c0 - &b0 * &c1) / (&a1 * &b1);
        if k3.is_zero() {
            em.skip("l3", "L3 is a multiple of L2, so t is the constant root of L1");
        } else {
            let z3 = rational_z(vec![(-1, k3), (0, -&a0 / &a1)]);
            em.emit("l3", z3, one.clone(), 1, q(&c1 / &b1), 0, &d1, units);
        }
    }

    let u0 = (&b0 * &c1 - &b1 * &c0) / &cross;
    let v0 = -(&a0 * &c1 - &a1 * &c0) / &cross;
    if u0.is_zero() || v0.is_zero() {
        em.skip(
            "l-constant",
            format_args!("the constant solution (u, v) = ({u0}, {v0}) has a zero entry"),
        );
    } else {
        let z = rational_z(vec![(1, Rational::one())]);
        em.emit("l-constant", z, q(u0), 0, q(v0), 0, &d1, ParameterDomain::SIntegers);
    }
    Ok(em.out)
}
