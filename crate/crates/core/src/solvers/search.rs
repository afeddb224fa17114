//! Search for families `a f(z) t^p + b g(z) t^q = h(z)` with `z` a polynomial
//! of degree 1 or 2.
//!
//! `z` is normalized by `s -> lambda s`: `z = t + x` for degree 1 and
//! `z = x t^2 + t + y` for degree 2. A degree-2 `z` without a linear term
//! forces `p`, `q` even (compare the parity of both sides), which makes the
//! family a degree-1 family in `s^2`, so nothing is lost.
//!
//! For fixed `(p, q)` the identity is linear in `(a, b)`: the coefficient
//! vector of `h(z)` must lie in the span of those of `f(z) t^p` and
//! `g(z) t^q`. Those two are never proportional (that would need a common
//! zero of `f` and `g`), so the condition is the vanishing of all 3x3 minors,
//! polynomials in the unknown coefficients of `z`.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::UnitEquation;
use crate::error::{Error, Result};
use crate::exactmath::{compose, rational_roots, BiPoly, LaurentPolynomial, Polynomial, Rational};
use crate::families::{canonical_form, verify_family, ParameterDomain, Provenance, SolutionFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub families: Vec<SolutionFamily>,
    pub diagnostics: Vec<String>,
    /// Largest `deg z` actually searched.
    pub max_deg_z: usize,
}

/// Finds every family with `1 <= deg z <= max_deg_z`, subject to
/// `(deg z - 1) n <= m - 1` where `m >= n` are the degrees of `f`, `g`.
/// Requires `gcd(f, g) = 1` and `deg f + deg g = deg h`.
pub fn search_families(eq: &UnitEquation, max_deg_z: usize) -> Result<SearchOutcome> {
    if !eq.coprime() {
        return Err(Error::Precondition {
            flag: "coprime",
            detail: "f and g share a zero".into(),
        });
    }
    if !eq.degree_sum_matches() {
        return Err(Error::Precondition {
            flag: "degree_sum_matches",
            detail: "deg f + deg g must equal deg h".into(),
        });
    }
    let swapped = eq.f().degree() < eq.g().degree();
    let work = if swapped { eq.swapped() } else { eq.clone() };
    let m = work.f().degree().unwrap();
    let n = work.g().degree().unwrap();
    if n == 0 {
        return Err(Error::InvalidDegrees("f and g must be nonconstant".into()));
    }
    let cap = (m - 1) / n + 1;
    let top = max_deg_z.min(cap);
    if top >= 3 {
        return Err(Error::Unsupported(format!(
            "family search with deg z = {top} for (m, n) = ({m}, {n}); only deg z <= 2 is implemented"
        )));
    }

    let tasks: Vec<(usize, i64, i64)> = (1..=top)
        .flat_map(|dz| exponent_pairs(m, n, dz).into_iter().map(move |(p, q)| (dz, p, q)))
        .collect();
    let results: Vec<(Vec<SolutionFamily>, Vec<String>)> =
        tasks.par_iter().map(|&(dz, p, q)| solve_pair(&work, dz, p, q)).collect();

    let mut families = Vec::new();
    let mut diagnostics = Vec::new();
    for (fams, diags) in results {
        families.extend(fams);
        diagnostics.extend(diags);
    }
    let mut families: Vec<SolutionFamily> = families
        .into_iter()
        .map(|f| {
            let f = if swapped {
                SolutionFamily::new(f.z, f.b, f.q, f.a, f.p, f.domain, f.provenance)
            } else {
                f
            };
            canonical_form(&f)
        })
        .collect();
    families.sort_by(|a, b| a.canonical_cmp(b));
    families.dedup();
    if swapped {
        diagnostics.push("f and g exchanged internally so that deg f >= deg g".into());
    }
    Ok(SearchOutcome {
        families,
        diagnostics,
        max_deg_z: top,
    })
}

/// The finite set of `(p, q)` for which the top degrees of
/// `a f(z) t^p + b g(z) t^q = h(z)` can balance, with `m >= n` and
/// `T = (m + n) dz`:
///
/// * `p = n dz` matches the top of `h(z)`, `q` in `[-n dz, m dz - 1]`;
/// * `q = m dz` likewise, `p` in `[-m dz, n dz - 1]`;
/// * both tops at `T + e`, cancelling down to `T`, `0 <= e <= m dz`.
///
/// Lower limits come from negative powers needing to cancel, upper limit on
/// `e` from `t^e` dividing `h(z)` past the order of the bracket. For
/// `dz >= 2` only `p, q >= 1` can occur.
pub fn exponent_pairs(m: usize, n: usize, dz: usize) -> Vec<(i64, i64)> {
    let (m, n, dz) = (m as i64, n as i64, dz as i64);
    let mut out = Vec::new();
    out.extend((-n * dz..m * dz).map(|q| (n * dz, q)));
    out.extend((-m * dz..n * dz).map(|p| (p, m * dz)));
    out.extend((0..=m * dz).map(|e| (n * dz + e, m * dz + e)));
    if dz >= 2 {
        out.retain(|&(p, q)| p >= 1 && q >= 1);
    }
    out
}

type SymPoly = Vec<BiPoly>;

fn sym_mul(a: &SymPoly, b: &SymPoly) -> SymPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BiPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn sym_compose(outer: &Polynomial, z: &SymPoly) -> SymPoly {
    let mut acc: SymPoly = Vec::new();
    for c in outer.coeffs().iter().rev() {
        acc = sym_mul(&acc, z);
        let k = BiPoly::constant(c.clone());
        if acc.is_empty() {
            acc.push(k);
        } else {
            acc[0] = &acc[0] + &k;
        }
    }
    acc
}

fn symbolic_z(dz: usize) -> SymPoly {
    let one = BiPoly::constant(Rational::from_integer(1.into()));
    match dz {
        1 => vec![BiPoly::x(), one],
        2 => vec![BiPoly::y(), one, BiPoly::x()],
        _ => unreachable!("deg z <= 2"),
    }
}

fn concrete_z(dz: usize, x: &Rational, y: &Rational) -> Polynomial {
    let one = Rational::from_integer(1.into());
    match dz {
        1 => Polynomial::new(vec![x.clone(), one]),
        2 => Polynomial::new(vec![y.clone(), one, x.clone()]),
        _ => unreachable!("deg z <= 2"),
    }
}

/// Rows `[F_e, G_e, H_e]` over all exponents `e` where some entry is nonzero.
fn coefficient_rows(eq: &UnitEquation, dz: usize, p: i64, q: i64) -> Vec<[BiPoly; 3]> {
    let z = symbolic_z(dz);
    let cols = [
        (sym_compose(eq.f(), &z), p),
        (sym_compose(eq.g(), &z), q),
        (sym_compose(eq.h(), &z), 0),
    ];
    let lo = cols.iter().map(|(_, s)| *s).min().unwrap();
    let hi = cols.iter().map(|(c, s)| s + c.len() as i64).max().unwrap();
    let entry = |(c, s): &(SymPoly, i64), e: i64| {
        usize::try_from(e - s)
            .ok()
            .and_then(|i| c.get(i).cloned())
            .unwrap_or_default()
    };
    (lo..hi)
        .map(|e| [entry(&cols[0], e), entry(&cols[1], e), entry(&cols[2], e)])
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect()
}

fn delta(rows: &[[BiPoly; 3]], i: usize, j: usize) -> BiPoly {
    &(&rows[i][0] * &rows[j][1]) - &(&rows[j][0] * &rows[i][1])
}

fn minor(rows: &[[BiPoly; 3]], i: usize, j: usize, k: usize) -> BiPoly {
    let t1 = &rows[k][2] * &delta(rows, i, j);
    let t2 = &rows[j][2] * &delta(rows, i, k);
    let t3 = &rows[i][2] * &delta(rows, j, k);
    &(&t1 - &t2) + &t3
}

/// A pair of rows whose `F`, `G` minor cannot vanish on the search domain:
/// a nonzero constant, or for `deg z = 2` a monomial in the leading
/// coefficient `x` of `z` (which is nonzero).
fn pivot_rows(rows: &[[BiPoly; 3]], dz: usize) -> Option<(usize, usize)> {
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let d = delta(rows, i, j);
            if d.degree_y() != Some(0) {
                continue;
            }
            let c = d.coeff_y(0);
            let support: Vec<usize> = (0..c.coeffs().len()).filter(|&k| !c.coeff(k).is_zero()).collect();
            let ok = match support[..] {
                [0] => true,
                [_] => dz >= 2,
                _ => false,
            };
            if ok {
                return Some((i, j));
            }
        }
    }
    None
}

/// The 3x3 minors whose common zeros are the solutions: with a pivot pair
/// only those through it, otherwise all of them.
fn minors<'a>(rows: &'a [[BiPoly; 3]], dz: usize) -> Box<dyn Iterator<Item = BiPoly> + 'a> {
    let r = rows.len();
    match pivot_rows(rows, dz) {
        Some((i, j)) => Box::new((0..r).filter(move |&k| k != i && k != j).map(move |k| minor(rows, i, j, k))),
        None => Box::new((0..r).flat_map(move |i| {
            (i + 1..r).flat_map(move |j| (j + 1..r).map(move |k| minor(rows, i, j, k)))
        })),
    }
}

fn solve_pair(eq: &UnitEquation, dz: usize, p: i64, q: i64) -> (Vec<SolutionFamily>, Vec<String>) {
    let rows = coefficient_rows(eq, dz, p, q);
    let mut diags = Vec::new();
    let candidates = match dz {
        1 => candidates_deg1(&rows),
        _ => candidates_deg2(&rows),
    };
    let candidates = match candidates {
        Ok(c) => c,
        Err(why) => {
            diags.push(format!("deg z = {dz}, (p, q) = ({p}, {q}): {why}; skipped"));
            return (Vec::new(), diags);
        }
    };
    let fams = candidates
        .into_iter()
        .filter_map(|(x, y)| family_at(eq, &concrete_z(dz, &x, &y), p, q))
        .collect();
    (fams, diags)
}

fn candidates_deg1(rows: &[[BiPoly; 3]]) -> std::result::Result<Vec<(Rational, Rational)>, String> {
    let mut g = Polynomial::zero();
    for m in minors(rows, 1) {
        let m = m.coeff_y(0);
        if m.is_zero() {
            continue;
        }
        g = if g.is_zero() { m.monic() } else { g.gcd(&m) };
        if g.is_constant() {
            return Ok(Vec::new());
        }
    }
    if g.is_zero() {
        return Err("every shift satisfies the rank condition".into());
    }
    Ok(rational_roots(&g)
        .into_iter()
        .map(|x| (x, Rational::zero()))
        .collect())
}

fn candidates_deg2(rows: &[[BiPoly; 3]]) -> std::result::Result<Vec<(Rational, Rational)>, String> {
    let ms: Vec<BiPoly> = minors(rows, 2).filter(|m| !m.is_zero()).collect();
    let Some(pivot) = ms
        .iter()
        .min_by_key(|m| (m.degree_y(), m.total_degree()))
        .cloned()
    else {
        return Err("the rank condition holds identically".into());
    };
    let mut gx = Polynomial::zero();
    if pivot.degree_y() == Some(0) {
        gx = pivot.coeff_y(0);
    } else {
        for m in &ms {
            let r = pivot.resultant_y(m);
            if r.is_zero() {
                continue;
            }
            gx = if gx.is_zero() { r.monic() } else { gx.gcd(&r) };
            if gx.is_constant() {
                return Ok(Vec::new());
            }
        }
    }
    if gx.is_zero() {
        return Err("the minors share a common curve".into());
    }
    let mut out = Vec::new();
    for x in rational_roots(&gx) {
        if x.is_zero() {
            continue;
        }
        let mut gy = Polynomial::zero();
        for m in &ms {
            let my = m.eval_x(&x);
            if my.is_zero() {
                continue;
            }
            gy = if gy.is_zero() { my.monic() } else { gy.gcd(&my) };
            if gy.is_constant() {
                break;
            }
        }
        if gy.is_zero() {
            return Err(format!("every constant term works for leading coefficient {x}"));
        }
        out.extend(rational_roots(&gy).into_iter().map(|y| (x.clone(), y)));
    }
    Ok(out)
}

/// Solves for `(a, b)` at a concrete `z` and keeps the family if the whole
/// identity holds with `a, b != 0`.
fn family_at(eq: &UnitEquation, z: &Polynomial, p: i64, q: i64) -> Option<SolutionFamily> {
    let zl = LaurentPolynomial::from(z.clone());
    let fl = compose(eq.f(), &zl).shift(p);
    let gl = compose(eq.g(), &zl).shift(q);
    let hl = compose(eq.h(), &zl);
    let lo = [&fl, &gl, &hl].iter().filter_map(|l| l.min_exponent()).min()?;
    let hi = [&fl, &gl, &hl].iter().filter_map(|l| l.max_exponent()).max()?;
    let exps: Vec<i64> = (lo..=hi).collect();
    for (i, &e1) in exps.iter().enumerate() {
        for &e2 in &exps[i + 1..] {
            let det = fl.coeff(e1) * gl.coeff(e2) - fl.coeff(e2) * gl.coeff(e1);
            if det.is_zero() {
                continue;
            }
            let a = (hl.coeff(e1) * gl.coeff(e2) - hl.coeff(e2) * gl.coeff(e1)) / &det;
            let b = (fl.coeff(e1) * hl.coeff(e2) - fl.coeff(e2) * hl.coeff(e1)) / &det;
            if a.is_zero() || b.is_zero() {
                return None;
            }
            let fam = SolutionFamily::new(zl, a, p, b, q, ParameterDomain::AllRationals, Provenance::Search);
            return verify_family(&fam, eq).then_some(fam);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn eq(f: &str, g: &str, h: &str) -> UnitEquation {
        let p = |s: &str| s.parse::<Polynomial>().unwrap();
        UnitEquation::new(p(f), p(g), p(h)).unwrap()
    }

    #[test]
    fn exponent_ranges() {
        let pairs = exponent_pairs(1, 1, 1);
        assert_eq!(pairs, vec![(1, -1), (1, 0), (-1, 1), (0, 1), (1, 1), (2, 2)]);
        assert!(exponent_pairs(3, 1, 2).iter().all(|&(p, q)| p >= 1 && q >= 1));
    }

    #[test]
    fn quadratic_example_has_four_families() {
        let out = search_families(&eq("t", "t+1", "t^2-4"), 1).unwrap();
        let zs: Vec<String> = out.families.iter().map(|f| f.z.to_string()).collect();
        assert_eq!(out.families.len(), 4, "{zs:?}");
        assert!(out.families.iter().any(|f| f.z.to_string() == "t - 4" && f.b == int(-4) && f.q == 0));
    }

    #[test]
    fn degree_bound_caps_search() {
        let out = search_families(&eq("t^2", "t^2+1", "t^4-3*t+1"), 5).unwrap();
        assert_eq!(out.max_deg_z, 1);
    }

    #[test]
    fn unsupported_degree() {
        let e = eq("t^5+1", "t", "t^6+2");
        assert!(matches!(search_families(&e, 3), Err(Error::Unsupported(_))));
        assert!(search_families(&e, 2).is_ok());
    }

    #[test]
    fn preconditions_name_the_flag() {
        let e = eq("t", "t+1", "t^3");
        assert!(matches!(
            search_families(&e, 1),
            Err(Error::Precondition {
                flag: "degree_sum_matches",
                ..
            })
        ));
    }
}
