//! The boundary divisor `Z` on `P1 x P1` attached to `f u + g v = h`.
//!
//! Coordinates are `([x1:y1], [x2:y2])`. The four components are
//!
//! * `Z1 = {y2 = 0}`, type `(0,1)`;
//! * `Z2 = {y1 = 0}`, type `(1,0)`;
//! * `Z3 = {x1 F(x2,y2) - y1 F~(x2,y2) = 0}` with `F`, `F~` the forms of
//!   `f`, `f~` homogenized to `d = max(deg f, deg f~)`;
//! * `Z4`, the same with `g`, `g~`.
//!
//! A form of type `(a, b)` has degree `a` in `(x1, y1)` and `b` in `(x2, y2)`.
//! Solutions with `t` an S-integer and `u`, `v` S-units correspond to
//! S-integral points on the complement of `Z`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::bezout::BezoutCofactors;
use crate::error::{Error, Result};
use crate::exactmath::{rational_roots, Polynomial, Rational};

/// `sum c_i x2^i y2^(d-i)`, stored as the polynomial `sum c_i t^i` plus `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    poly: Polynomial,
    degree: usize,
}

impl BinaryForm {
    pub fn new(poly: Polynomial, degree: usize) -> Self {
        assert!(poly.degree().is_none_or(|d| d <= degree));
        BinaryForm { poly, degree }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `x2^i y2^(d-i)`.
    pub fn coeff(&self, i: usize) -> Rational {
        self.poly.coeff(i)
    }

    pub fn evaluate(&self, x2: &Rational, y2: &Rational) -> Rational {
        self.terms()
            .map(|(i, c)| c * pow(x2, i) * pow(y2, self.degree - i))
            .sum()
    }

    fn partial_x(&self, x2: &Rational, y2: &Rational) -> Rational {
        self.terms()
            .filter(|(i, _)| *i > 0)
            .map(|(i, c)| c * Rational::from_integer(i.into()) * pow(x2, i - 1) * pow(y2, self.degree - i))
            .sum()
    }

    fn partial_y(&self, x2: &Rational, y2: &Rational) -> Rational {
        self.terms()
            .filter(|(i, _)| *i < self.degree)
            .map(|(i, c)| {
                c * Rational::from_integer((self.degree - i).into()) * pow(x2, i) * pow(y2, self.degree - i - 1)
            })
            .sum()
    }

    fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.poly.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentForm {
    /// `y1`
    Y1,
    /// `y2`
    Y2,
    /// `x1 * a(x2, y2) - y1 * b(x2, y2)`
    Graph { a: BinaryForm, b: BinaryForm },
}

impl ComponentForm {
    pub fn evaluate(&self, p: &Point) -> Rational {
        let [x1, y1] = &p.first;
        let [x2, y2] = &p.second;
        match self {
            ComponentForm::Y1 => y1.clone(),
            ComponentForm::Y2 => y2.clone(),
            ComponentForm::Graph { a, b } => x1 * a.evaluate(x2, y2) - y1 * b.evaluate(x2, y2),
        }
    }

    /// Gradient in the affine chart around `p`: the first factor is
    /// dehomogenized at whichever of `x1`, `y1` is nonzero at `p`, likewise
    /// for the second factor.
    fn local_gradient(&self, p: &Point) -> (Rational, Rational) {
        let [x1, y1] = &p.first;
        let [x2, y2] = &p.second;
        let first_local_is_x1 = !y1.is_zero();
        let second_local_is_x2 = !y2.is_zero();
        let one = Rational::one();
        let zero = Rational::zero();
        match self {
            ComponentForm::Y1 => (if first_local_is_x1 { zero.clone() } else { one }, zero),
            ComponentForm::Y2 => (zero, if second_local_is_x2 { Rational::zero() } else { one }),
            ComponentForm::Graph { a, b } => {
                let d_first = if first_local_is_x1 {
                    a.evaluate(x2, y2)
                } else {
                    -b.evaluate(x2, y2)
                };
                let (da, db) = if second_local_is_x2 {
                    (a.partial_x(x2, y2), b.partial_x(x2, y2))
                } else {
                    (a.partial_y(x2, y2), b.partial_y(x2, y2))
                };
                (d_first, x1 * da - y1 * db)
            }
        }
    }

    fn render(&self) -> String {
        match self {
            ComponentForm::Y1 => "y1".into(),
            ComponentForm::Y2 => "y2".into(),
            ComponentForm::Graph { a, b } => {
                let mut terms: Vec<(Rational, String)> = Vec::new();
                for (first, form, sign) in [("x1", a, 1), ("y1", b, -1)] {
                    for i in (0..=form.degree).rev() {
                        let c = form.coeff(i);
                        if c.is_zero() {
                            continue;
                        }
                        let mut mono = first.to_string();
                        push_power(&mut mono, "x2", i);
                        push_power(&mut mono, "y2", form.degree - i);
                        terms.push((if sign < 0 { -c } else { c }, mono));
                    }
                }
                render_sum(&terms)
            }
        }
    }
}

fn push_power(out: &mut String, var: &str, e: usize) {
    match e {
        0 => {}
        1 => {
            out.push('*');
            out.push_str(var);
        }
        _ => out.push_str(&format!("*{var}^{e}")),
    }
}

fn render_sum(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (k == 0, neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(mono);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub label: &'static str,
    pub bidegree: (usize, usize),
    #[serde(skip)]
    pub form: ComponentForm,
    #[serde(rename = "form")]
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorConfig {
    pub m: usize,
    pub n: usize,
    pub components: Vec<Component>,
}

impl DivisorConfig {
    pub fn component(&self, label: &str) -> &Component {
        self.components
            .iter()
            .find(|c| c.label == label)
            .expect("component labels are Z1..Z4")
    }
}

/// Builds `Z1..Z4`. The pair `(F, F~)` is scaled together to coprime integer
/// coefficients (positive content removed).
pub fn build_divisor_config(f: &Polynomial, g: &Polynomial, cofactors: &BezoutCofactors) -> Result<DivisorConfig> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let common = f.gcd(g);
    if !common.is_constant() {
        return Err(Error::CommonZero(common.to_string()));
    }
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    Ok(DivisorConfig {
        m,
        n,
        components: vec![
            Component {
                label: "Z1",
                bidegree: (0, 1),
                text: ComponentForm::Y2.render(),
                form: ComponentForm::Y2,
                note: None,
            },
            Component {
                label: "Z2",
                bidegree: (1, 0),
                text: ComponentForm::Y1.render(),
                form: ComponentForm::Y1,
                note: None,
            },
            graph_component("Z3", f, &cofactors.ftilde),
            graph_component("Z4", g, &cofactors.gtilde),
        ],
    })
}

fn graph_component(label: &'static str, p: &Polynomial, ptilde: &Polynomial) -> Component {
    let d = p.degree().unwrap_or(0).max(ptilde.degree().unwrap_or(0));
    let content = pair_content(p, ptilde);
    let a = BinaryForm::new(p.scale(&content.recip()), d);
    let b = BinaryForm::new(ptilde.scale(&content.recip()), d);
    let note = if d == 0 {
        Some("degree 0: the component is the fiber x1 = 0".to_string())
    } else if ptilde.is_zero() {
        Some("zero cofactor: the component contains the fiber x1 = 0".to_string())
    } else {
        None
    };
    let form = ComponentForm::Graph { a, b };
    Component {
        label,
        bidegree: (1, d),
        text: form.render(),
        form,
        note,
    }
}

/// Positive rational `c` such that `p / c` and `q / c` have coprime integer
/// coefficients.
fn pair_content(p: &Polynomial, q: &Polynomial) -> Rational {
    let all = p.coeffs().iter().chain(q.coeffs()).filter(|c| !c.is_zero());
    let (num, den) = all.fold((BigInt::zero(), BigInt::one()), |(n, d), c| {
        (n.gcd(c.numer()), d.lcm(c.denom()))
    });
    if num.is_zero() {
        Rational::one()
    } else {
        Rational::new(num, den)
    }
}

/// A point of `P1 x P1`, each factor normalized to `[x:1]` or `[1:0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub first: [Rational; 2],
    pub second: [Rational; 2],
}

impl Point {
    pub fn new(first: [Rational; 2], second: [Rational; 2]) -> Self {
        Point {
            first: normalize(first),
            second: normalize(second),
        }
    }
}

fn normalize([x, y]: [Rational; 2]) -> [Rational; 2] {
    assert!(!(x.is_zero() && y.is_zero()), "[0:0] is not a point");
    if y.is_zero() {
        [Rational::one(), Rational::zero()]
    } else {
        [x / &y, Rational::one()]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = &self.first;
        let [c, d] = &self.second;
        write!(f, "([{a}:{b}],[{c}:{d}])")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub triple: [&'static str; 3],
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CzConfiguration {
    pub triple: [&'static str; 3],
    pub point: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralPositionReport {
    pub in_general_position: bool,
    pub violations: Vec<Violation>,
    pub cz_configuration: Option<CzConfiguration>,
}

struct Graph<'a> {
    a: &'a BinaryForm,
    b: &'a BinaryForm,
}

fn graph<'a>(c: &'a Component) -> Graph<'a> {
    match &c.form {
        ComponentForm::Graph { a, b } => Graph { a, b },
        _ => unreachable!("Z3 and Z4 are graph components"),
    }
}

/// Checks that no three of `Z1..Z4` share a point. Every triple contains a
/// fiber, so each check reduces to a univariate condition on the fiber:
///
/// * `Z1 Z2 Z3`, `Z1 Z2 Z4`: the form's value at `([1:0],[1:0])`;
/// * `Z1 Z3 Z4` (on `y2 = 0`): a 2x2 determinant of top coefficients;
/// * `Z2 Z3 Z4` (on `y1 = 0`): common zeros of `F` and `G` on `P1`.
pub fn check_general_position(config: &DivisorConfig) -> GeneralPositionReport {
    let z3 = graph(config.component("Z3"));
    let z4 = graph(config.component("Z4"));
    let corner = Point::new([Rational::one(), Rational::zero()], [Rational::one(), Rational::zero()]);
    let mut violations = Vec::new();

    for (label, g) in [("Z3", &z3), ("Z4", &z4)] {
        if g.a.coeff(g.a.degree()).is_zero() {
            violations.push(Violation {
                triple: ["Z1", "Z2", label],
                witness: format!("{corner}: degree defect, the top coefficient of {label} vanishes"),
            });
        }
    }

    // On y2 = 0 (so x2 = 1): x1*F(1,0) - y1*F~(1,0) = 0 and likewise for G.
    let (f10, ft10) = (z3.a.coeff(z3.a.degree()), z3.b.coeff(z3.b.degree()));
    let (g10, gt10) = (z4.a.coeff(z4.a.degree()), z4.b.coeff(z4.b.degree()));
    let det = &f10 * &gt10 - &ft10 * &g10;
    let mut cz_candidate = None;
    if det.is_zero() {
        let row = if !(f10.is_zero() && ft10.is_zero()) {
            Some((f10, ft10))
        } else if !(g10.is_zero() && gt10.is_zero()) {
            Some((g10, gt10))
        } else {
            None
        };
        let witness = match row {
            Some((c, ct)) => {
                let p = Point::new([ct, c], [Rational::one(), Rational::zero()]);
                let w = format!("{p}: the top coefficients of Z3 and Z4 are proportional");
                cz_candidate = Some(p);
                w
            }
            None => "Z3 and Z4 both contain Z1".to_string(),
        };
        violations.push(Violation {
            triple: ["Z1", "Z3", "Z4"],
            witness,
        });
    }

    // On y1 = 0 (so x1 = 1): F(x2,y2) = G(x2,y2) = 0.
    let mut common = Vec::new();
    let gcd = z3.a.poly().gcd(z4.a.poly());
    if !gcd.is_constant() {
        let roots = rational_roots(&gcd);
        for r in &roots {
            common.push(Point::new([Rational::one(), Rational::zero()], [r.clone(), Rational::one()]).to_string());
        }
        if roots.len() < gcd.degree().unwrap() {
            common.push(format!("([1:0],[x2:1]) for the irrational roots of {gcd}"));
        }
    }
    if z3.a.coeff(z3.a.degree()).is_zero() && z4.a.coeff(z4.a.degree()).is_zero() {
        common.push(corner.to_string());
    }
    if !common.is_empty() {
        violations.push(Violation {
            triple: ["Z2", "Z3", "Z4"],
            witness: format!("common zeros of F and G: {}", common.join(", ")),
        });
    }

    let cz_configuration = match (&violations[..], cz_candidate) {
        ([only], Some(point)) if only.triple == ["Z1", "Z3", "Z4"] => {
            let types_ok = ["Z3", "Z4"].iter().all(|l| config.component(l).bidegree == (1, 1));
            let forms = ["Z1", "Z3", "Z4"].map(|l| &config.component(l).form);
            if types_ok { pairwise_transversal(&forms, &point) } else { false }
                .then_some(CzConfiguration {
                    triple: ["Z1", "Z3", "Z4"],
                    point,
                })
        }
        _ => None,
    };

    GeneralPositionReport {
        in_general_position: violations.is_empty(),
        violations,
        cz_configuration,
    }
}

fn pairwise_transversal(forms: &[&ComponentForm], p: &Point) -> bool {
    let grads: Vec<_> = forms.iter().map(|f| f.local_gradient(p)).collect();
    for i in 0..grads.len() {
        for j in i + 1..grads.len() {
            let (a, b) = &grads[i];
            let (c, d) = &grads[j];
            if (a * d - b * c).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Where the two boundary points of an exceptional curve may sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndpointConfig {
    Fiber,
    Z1Z2AndZ3Z4,
    Z1Z3AndZ2Z4,
    Z1Z4AndZ2Z3,
}

impl fmt::Display for EndpointConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EndpointConfig::Fiber => "fiber",
            EndpointConfig::Z1Z2AndZ3Z4 => "Z1∩Z2 & Z3∩Z4",
            EndpointConfig::Z1Z3AndZ2Z4 => "Z1∩Z3 & Z2∩Z4",
            EndpointConfig::Z1Z4AndZ2Z3 => "Z1∩Z4 & Z2∩Z3",
        })
    }
}

impl Serialize for EndpointConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveCandidate {
    pub bidegree: (usize, usize),
    pub endpoint_config: EndpointConfig,
}

/// Types of irreducible curves that can carry infinitely many integral
/// points, for `m = deg f >= n = deg g >= 1`.
///
/// Order: the two fibers, then `(1,p)` and `(q,1)` with endpoints on
/// `Z1∩Z2` and `Z3∩Z4`, then `(1,p)` for the two mixed endpoint pairings.
pub fn enumerate_exceptional_candidates(m: usize, n: usize) -> Result<Vec<CurveCandidate>> {
    if n < 1 || m < n {
        return Err(Error::InvalidDegrees(format!(
            "need m >= n >= 1, got (m, n) = ({m}, {n})"
        )));
    }
    let cand = |bidegree, endpoint_config| CurveCandidate {
        bidegree,
        endpoint_config,
    };
    let mut out = vec![cand((0, 1), EndpointConfig::Fiber), cand((1, 0), EndpointConfig::Fiber)];
    out.extend((1..=m).map(|p| cand((1, p), EndpointConfig::Z1Z2AndZ3Z4)));
    out.extend(
        (2..)
            .take_while(|q| (q - 1) * n < m)
            .map(|q| cand((q, 1), EndpointConfig::Z1Z2AndZ3Z4)),
    );
    for config in [EndpointConfig::Z1Z3AndZ2Z4, EndpointConfig::Z1Z4AndZ2Z3] {
        out.extend((1..=m).map(|p| cand((1, p), config)));
    }
    Ok(out)
}

/// Whether a general instance with `m >= n >= 1` is expected to have only
/// `(0,1)` exceptional curves, i.e. no nonconstant families.
pub fn genericity_prediction(m: usize, n: usize) -> bool {
    m + n > 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bezout::compute_cofactors;
    use crate::exactmath::int;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn config(f: &str, g: &str, h: &str) -> DivisorConfig {
        let (f, g, h) = (p(f), p(g), p(h));
        let c = compute_cofactors(&f, &g, &h).unwrap();
        build_divisor_config(&f, &g, &c).unwrap()
    }

    #[test]
    fn quadratic_example_forms() {
        let c = config("t", "t+1", "t^2-4");
        assert_eq!(c.component("Z3").text, "x1*x2 + 4*y1*y2");
        assert_eq!(c.component("Z3").bidegree, (1, 1));
        assert_eq!(c.component("Z4").text, "x1*x2 + x1*y2 - y1*x2 - 4*y1*y2");
        let r = check_general_position(&c);
        assert!(r.in_general_position, "{r:?}");
        assert!(r.cz_configuration.is_none());
    }

    #[test]
    fn constant_f_is_flagged() {
        let c = config("1", "t", "t+5");
        let z3 = c.component("Z3");
        assert_eq!(z3.bidegree, (1, 0));
        assert!(z3.note.is_some());
    }

    #[test]
    fn degree_defect_at_infinity() {
        let r = check_general_position(&config("t", "t+1", "t^3"));
        assert!(!r.in_general_position);
        assert!(r.violations.iter().all(|v| v.witness.starts_with("([1:0],[1:0])")));
        assert_eq!(r.violations[0].triple, ["Z1", "Z2", "Z4"]);
    }

    #[test]
    fn cz_for_linear_instance() {
        let r = check_general_position(&config("t", "t+1", "2*t+3"));
        let cz = r.cz_configuration.expect("CZ configuration");
        assert_eq!(cz.triple, ["Z1", "Z3", "Z4"]);
        assert_eq!(cz.point, Point::new([int(0), int(1)], [int(1), int(0)]));
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(enumerate_exceptional_candidates(1, 1).unwrap().len(), 5);
        let c = enumerate_exceptional_candidates(3, 2).unwrap();
        assert_eq!(c.len(), 12);
        assert!(c.contains(&CurveCandidate {
            bidegree: (2, 1),
            endpoint_config: EndpointConfig::Z1Z2AndZ3Z4
        }));
        assert!(enumerate_exceptional_candidates(1, 0).is_err());
        assert!(!genericity_prediction(1, 1));
        assert!(genericity_prediction(2, 1));
    }
}
