//! Parametrized solution families `t = z(s)`, `u = a s^p`, `v = b s^q`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{
    compose, rational_pow, rational_roots, rational_text, LaurentPolynomial, Polynomial, Rational, Surd,
    SurdLaurent,
};
use crate::solvers::UnitEquation;
use crate::sring::{rational_nth_root, SUnitRing};

/// Where the parameter `s` ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParameterDomain {
    /// `s` an S-unit.
    SUnits,
    /// `s` any nonzero rational; the S-conditions are checked on `(t, u, v)`.
    AllRationals,
    /// `s` an S-integer (zero allowed). Used for `t`-free families where
    /// `z(s) = s` and `u`, `v` are constant.
    SIntegers,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedFormQuadratic,
    ClosedFormLinear,
    Search,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolutionFamily {
    pub z: LaurentPolynomial,
    #[serde(with = "rational_text")]
    pub a: Rational,
    #[serde(with = "rational_text")]
    pub b: Rational,
    pub p: i64,
    pub q: i64,
    pub domain: ParameterDomain,
    pub provenance: Provenance,
}

impl SolutionFamily {
    pub fn new(z: LaurentPolynomial, a: Rational, p: i64, b: Rational, q: i64, domain: ParameterDomain, provenance: Provenance) -> Self {
        SolutionFamily {
            z,
            a,
            b,
            p,
            q,
            domain,
            provenance,
        }
    }

    /// Largest absolute exponent of `z`; 0 for constant `z`.
    pub fn z_degree(&self) -> i64 {
        self.z.terms().map(|(k, _)| k.abs()).max().unwrap_or(0)
    }

    /// `(z(lambda t), a lambda^p, b lambda^q)`: the same set of triples when
    /// `lambda` is a unit of the parameter domain.
    pub fn reparametrize(&self, lambda: &Rational) -> Self {
        SolutionFamily {
            z: self.z.rescale_variable(lambda),
            a: &self.a * rational_pow(lambda, self.p),
            b: &self.b * rational_pow(lambda, self.q),
            ..self.clone()
        }
    }

    /// Deterministic order: `z` degree, `p`, `q`, then coefficients.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.z_degree()
            .cmp(&other.z_degree())
            .then(self.p.cmp(&other.p))
            .then(self.q.cmp(&other.q))
            .then_with(|| cmp_laurent(&self.z, &other.z))
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
            .then(self.domain.cmp(&other.domain))
            .then(self.provenance.cmp(&other.provenance))
    }
}

fn cmp_laurent(x: &LaurentPolynomial, y: &LaurentPolynomial) -> Ordering {
    let xs: Vec<_> = x.terms().collect();
    let ys: Vec<_> = y.terms().collect();
    xs.iter().rev().cmp(ys.iter().rev())
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t = {}, u = {}, v = {}",
            in_s(&self.z.to_string()),
            monomial_text(&self.a, self.p),
            monomial_text(&self.b, self.q)
        )
    }
}

fn monomial_text(c: &Rational, e: i64) -> String {
    in_s(&LaurentPolynomial::monomial(c.clone(), e).to_string())
}

fn surd_monomial(c: &Surd, e: i64, radicand: &BigInt) -> String {
    if c.irrational.is_zero() {
        return monomial_text(&c.rational, e);
    }
    match e {
        0 => c.display(radicand),
        1 => format!("({})*s", c.display(radicand)),
        _ => format!("({})*s^{e}", c.display(radicand)),
    }
}

/// Renames the variable of rendered text from `t` to `s`, sparing `sqrt`.
fn in_s(text: &str) -> String {
    text.split("sqrt").map(|part| part.replace('t', "s")).collect::<Vec<_>>().join("sqrt")
}

/// `a f(z) t^p + b g(z) t^q - h(z)`, which is zero exactly for a valid family.
pub fn family_residual(fam: &SolutionFamily, eq: &UnitEquation) -> LaurentPolynomial {
    let fz = compose(eq.f(), &fam.z).scale(&fam.a).shift(fam.p);
    let gz = compose(eq.g(), &fam.z).scale(&fam.b).shift(fam.q);
    &(&fz + &gz) - &compose(eq.h(), &fam.z)
}

pub fn verify_family(fam: &SolutionFamily, eq: &UnitEquation) -> bool {
    family_residual(fam, eq).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolutionTriple {
    #[serde(with = "rational_text")]
    pub t: Rational,
    #[serde(with = "rational_text")]
    pub u: Rational,
    #[serde(with = "rational_text")]
    pub v: Rational,
    pub trivial: bool,
}

impl SolutionTriple {
    pub fn new(eq: &UnitEquation, t: Rational, u: Rational, v: Rational) -> Self {
        let trivial = eq.is_trivial_point(&t);
        SolutionTriple { t, u, v, trivial }
    }
}

impl Ord for SolutionTriple {
    fn cmp(&self, o: &Self) -> Ordering {
        (&self.t, &self.u, &self.v).cmp(&(&o.t, &o.u, &o.v))
    }
}

impl PartialOrd for SolutionTriple {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for SolutionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.u, self.v)
    }
}

fn in_domain(domain: ParameterDomain, s: &Rational, ring: &SUnitRing) -> bool {
    match domain {
        ParameterDomain::SUnits => ring.is_s_unit(s),
        ParameterDomain::AllRationals => !s.is_zero(),
        ParameterDomain::SIntegers => ring.is_s_integer(s),
    }
}

/// The triple at parameter `s`, if `s` lies in the family's domain, `t` is an
/// S-integer and `u`, `v` are S-units.
pub fn instantiate(fam: &SolutionFamily, eq: &UnitEquation, s: &Rational, ring: &SUnitRing) -> Result<Option<SolutionTriple>> {
    if s.is_zero() && (fam.p < 0 || fam.q < 0) {
        return Err(Error::EvaluationAtPole);
    }
    let t = fam.z.evaluate(s)?;
    if !in_domain(fam.domain, s, ring) {
        return Ok(None);
    }
    let u = &fam.a * rational_pow(s, fam.p);
    let v = &fam.b * rational_pow(s, fam.q);
    if !(ring.is_s_integer(&t) && ring.is_s_unit(&u) && ring.is_s_unit(&v)) {
        return Ok(None);
    }
    Ok(Some(SolutionTriple::new(eq, t, u, v)))
}

/// A parameter `s` in the family's domain with `instantiate(s) = sol`.
///
/// When several exist (e.g. `s` and `-s` for an even family) the positive one
/// is returned.
pub fn member(fam: &SolutionFamily, sol: &SolutionTriple, ring: &SUnitRing) -> Option<Rational> {
    let mut candidates = if fam.z.is_constant() {
        if fam.z.coeff(0) != sol.t {
            return None;
        }
        constant_z_candidates(fam, sol)
    } else {
        // z(s) - t = 0, cleared of negative powers.
        let diff = &fam.z - &LaurentPolynomial::constant(sol.t.clone());
        let body = diff.body().clone();
        let mut roots = rational_roots(&body);
        if diff.offset() > 0 {
            roots.push(Rational::zero());
        }
        roots
    };
    candidates.sort_by(|x, y| y.is_positive().cmp(&x.is_positive()).then(x.abs().cmp(&y.abs())));
    candidates.dedup();
    candidates.into_iter().find(|s| {
        if s.is_zero() && (fam.p < 0 || fam.q < 0) {
            return false;
        }
        in_domain(fam.domain, s, ring)
            && fam.z.evaluate(s).is_ok_and(|t| t == sol.t)
            && &fam.a * rational_pow(s, fam.p) == sol.u
            && &fam.b * rational_pow(s, fam.q) == sol.v
    })
}

fn constant_z_candidates(fam: &SolutionFamily, sol: &SolutionTriple) -> Vec<Rational> {
    let from = |c: &Rational, target: &Rational, e: i64| -> Option<Vec<Rational>> {
        if e == 0 {
            return None;
        }
        let root = rational_nth_root(&(target / c), e).ok()??;
        let mut out = vec![root.root.clone()];
        if root.negative_also {
            out.push(-root.root);
        }
        Some(out)
    };
    if fam.a.is_zero() || fam.b.is_zero() || sol.u.is_zero() || sol.v.is_zero() {
        return Vec::new();
    }
    if let Some(c) = from(&fam.a, &sol.u, fam.p) {
        return c;
    }
    if let Some(c) = from(&fam.b, &sol.v, fam.q) {
        return c;
    }
    // p = q = 0: every s gives the same triple.
    vec![Rational::from_integer(1.into())]
}

/// If `other` is `fam` reparametrized by some `lambda`, returns `lambda`.
pub fn equivalence_scale(fam: &SolutionFamily, other: &SolutionFamily) -> Option<Rational> {
    if fam.p != other.p || fam.q != other.q {
        return None;
    }
    let Some((k, c)) = fam.z.terms().filter(|(k, _)| *k != 0).max_by_key(|(k, _)| k.abs()) else {
        return (fam == other).then(|| Rational::from_integer(1.into()));
    };
    let target = other.z.coeff(k);
    if target.is_zero() {
        return None;
    }
    let root = rational_nth_root(&(target / c), k).ok()??;
    let mut lambdas = vec![root.root.clone()];
    if root.negative_also {
        lambdas.push(-root.root);
    }
    lambdas.into_iter().find(|l| {
        let r = fam.reparametrize(l);
        r.z == other.z && r.a == other.a && r.b == other.b
    })
}

/// A representative of the family's reparametrization class.
///
/// Uses the nonconstant term of `z` with the smallest `|k|` for which
/// `lambda^k = 1 / c_k` has a rational solution, making that coefficient 1;
/// for even `k` the sign of `lambda` is chosen to make the first
/// odd-exponent coefficient positive (else `lambda > 0`). Two families with
/// the same representative are equivalent; the converse holds whenever some
/// coefficient is normalizable, which includes every `z` with a `t` or
/// `t^-1` term.
pub fn canonical_form(fam: &SolutionFamily) -> SolutionFamily {
    let mut terms: Vec<(i64, Rational)> = fam.z.terms().filter(|(k, _)| *k != 0).map(|(k, c)| (k, c.clone())).collect();
    terms.sort_by_key(|(k, _)| (k.abs(), *k < 0));
    for (k, c) in &terms {
        let Ok(Some(root)) = rational_nth_root(&c.recip(), *k) else {
            continue;
        };
        let mut lambda = root.root;
        if root.negative_also {
            let odd = fam
                .z
                .rescale_variable(&lambda)
                .terms()
                .filter(|(j, _)| j % 2 != 0)
                .map(|(_, c)| c.is_negative())
                .next();
            if odd == Some(true) {
                lambda = -lambda;
            }
        }
        return fam.reparametrize(&lambda);
    }
    fam.clone()
}

/// A family over `Q(sqrt(radicand))`, kept for display and symbolic checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdFamily {
    pub radicand: BigInt,
    pub z: SurdLaurent,
    pub a: Surd,
    pub b: Surd,
    pub p: i64,
    pub q: i64,
    pub domain: ParameterDomain,
    pub provenance: Provenance,
}

pub fn verify_surd_family(fam: &SurdFamily, eq: &UnitEquation) -> bool {
    let d = &fam.radicand;
    let side = |poly: &Polynomial, c: &Surd, e: i64| {
        SurdLaurent::constant(c)
            .mul(&SurdLaurent::compose_into(poly, &fam.z, d), d)
            .shift(e)
    };
    let lhs = side(eq.f(), &fam.a, fam.p).add(&side(eq.g(), &fam.b, fam.q));
    lhs.sub(&SurdLaurent::compose_into(eq.h(), &fam.z, d)).is_zero()
}

/// Either kind of family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyBody {
    Rational(SolutionFamily),
    Surd(SurdFamily),
}

/// A family as reported by the solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmittedFamily {
    pub label: String,
    pub body: FamilyBody,
    /// No parameter value yields S-units (e.g. a fixed `u` that is not one).
    pub empty_over_ring: bool,
    pub note: Option<String>,
}

impl EmittedFamily {
    pub fn rational(&self) -> Option<&SolutionFamily> {
        match &self.body {
            FamilyBody::Rational(f) => Some(f),
            FamilyBody::Surd(_) => None,
        }
    }
}

impl fmt::Display for EmittedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            FamilyBody::Rational(fam) => write!(f, "{}: {fam}", self.label)?,
            FamilyBody::Surd(fam) => {
                let d = &fam.radicand;
                write!(
                    f,
                    "{}: t = {}, u = {}, v = {} [over Q(sqrt({d}))]",
                    self.label,
                    in_s(&fam.z.display(d)),
                    surd_monomial(&fam.a, fam.p, d),
                    surd_monomial(&fam.b, fam.q, d),
                )?
            }
        }
        if self.empty_over_ring {
            f.write_str(" [empty over the given S]")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// Flat record: `label, z, a, b, p, q, domain, provenance`, then
/// `radicand`, `empty_over_ring`, `note` when present.
impl Serialize for EmittedFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("label", &self.label)?;
        match &self.body {
            FamilyBody::Rational(fam) => {
                m.serialize_entry("z", &fam.z)?;
                m.serialize_entry("a", &fam.a.to_string())?;
                m.serialize_entry("b", &fam.b.to_string())?;
                m.serialize_entry("p", &fam.p)?;
                m.serialize_entry("q", &fam.q)?;
                m.serialize_entry("domain", &fam.domain)?;
                m.serialize_entry("provenance", &fam.provenance)?;
            }
            FamilyBody::Surd(fam) => {
                let d = &fam.radicand;
                m.serialize_entry("z", &fam.z.display(d))?;
                m.serialize_entry("a", &fam.a.display(d))?;
                m.serialize_entry("b", &fam.b.display(d))?;
                m.serialize_entry("p", &fam.p)?;
                m.serialize_entry("q", &fam.q)?;
                m.serialize_entry("domain", &fam.domain)?;
                m.serialize_entry("provenance", &fam.provenance)?;
                m.serialize_entry("radicand", &d.to_string())?;
            }
        }
        if self.empty_over_ring {
            m.serialize_entry("empty_over_ring", &true)?;
        }
        if let Some(n) = &self.note {
            m.serialize_entry("note", n)?;
        }
        m.end()
    }
}
