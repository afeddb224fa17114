use num_traits::Zero;
use serde::Serialize;

use super::UnitEquation;
use crate::error::{Error, Result};
use crate::exactmath::{rational_roots, rational_text, Rational};
use crate::families::SolutionTriple;
use crate::sring::SUnitRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrivialPattern {
    /// `f(t0) = 0`: `u` is free, `v = fixed_value`.
    UFree,
    /// `g(t0) = 0`: `v` is free, `u = fixed_value`.
    VFree,
    /// `h(t0) = 0`: `u = fixed_value * v` with `v` free.
    RatioLocked,
    /// No S-unit solutions at `t0`.
    Empty,
}

/// The solutions with `t = t0` for a zero `t0` of `f g h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialSolutionSet {
    #[serde(with = "rational_text")]
    pub t0: Rational,
    pub pattern: TrivialPattern,
    #[serde(serialize_with = "opt_rational")]
    pub fixed_value: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn opt_rational<S: serde::Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

impl TrivialSolutionSet {
    pub fn contains(&self, sol: &SolutionTriple) -> bool {
        if sol.t != self.t0 {
            return false;
        }
        let fixed = self.fixed_value.as_ref();
        match self.pattern {
            TrivialPattern::UFree => fixed == Some(&sol.v),
            TrivialPattern::VFree => fixed == Some(&sol.u),
            TrivialPattern::RatioLocked => fixed.is_some_and(|r| r * &sol.v == sol.u),
            TrivialPattern::Empty => false,
        }
    }

    fn empty(t0: Rational, reason: String) -> Self {
        TrivialSolutionSet {
            t0,
            pattern: TrivialPattern::Empty,
            fixed_value: None,
            reason: Some(reason),
        }
    }
}

/// One entry per distinct rational zero of `f g h`, in increasing order.
/// Zeros that are not S-integers are listed with an empty pattern.
pub fn trivial_solutions(eq: &UnitEquation, ring: &SUnitRing) -> Result<Vec<TrivialSolutionSet>> {
    if !eq.coprime() {
        return Err(Error::Precondition {
            flag: "coprime",
            detail: "f and g share a zero; reduce the common factor first".into(),
        });
    }
    let product = &(eq.f() * eq.g()) * eq.h();
    let mut out = Vec::new();
    for t0 in rational_roots(&product) {
        if !ring.is_s_integer(&t0) {
            out.push(TrivialSolutionSet::empty(t0, format!("not an S-integer for S = {ring}")));
            continue;
        }
        let (ft, gt, ht) = (eq.f().evaluate(&t0), eq.g().evaluate(&t0), eq.h().evaluate(&t0));
        let (pattern, value) = if ft.is_zero() {
            (TrivialPattern::UFree, &ht / &gt)
        } else if gt.is_zero() {
            (TrivialPattern::VFree, &ht / &ft)
        } else {
            (TrivialPattern::RatioLocked, -(&gt / &ft))
        };
        let set = if ring.is_s_unit(&value) {
            TrivialSolutionSet {
                t0,
                pattern,
                fixed_value: Some(value),
                reason: None,
            }
        } else {
            let what = match pattern {
                TrivialPattern::UFree => "v",
                TrivialPattern::VFree => "u",
                _ => "u/v",
            };
            TrivialSolutionSet::empty(t0, format!("{what} = {value} is not an S-unit"))
        };
        out.push(set);
    }
    Ok(out)
}
