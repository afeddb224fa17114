//! Brute-force enumeration of solutions inside a box, and classification of
//! what it finds against trivial sets and families.
//!
//! Two independent modes:
//!
//! * unit sweep: for every `(u, v)` with exponents bounded by `B`, the
//!   rational roots of `f u + g v - h` that are S-integers;
//! * `t` sweep: for every S-integer `t` of height at most `H` and every
//!   bounded `u`, the value `v = (h(t) - f(t) u) / g(t)` when it is an S-unit.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactmath::{rational_roots, rational_text, Rational};
use crate::families::{instantiate, member, SolutionFamily, SolutionTriple};
use crate::solvers::{trivial_solutions, TrivialSolutionSet, UnitEquation};
use crate::sring::SUnitRing;

/// Height of the `t` grid used for `(u, v)` pairs that satisfy the equation
/// for every `t`, when no explicit height is given.
pub const DEFAULT_IDENTITY_HEIGHT: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Bound on `|e_p|` for every prime of S, in both `u` and `v`.
    pub exponent_bound: u32,
    /// Bound on `|numerator|` and denominator of `t` for the `t` sweep.
    pub t_height_bound: Option<u64>,
}

impl SearchBounds {
    pub fn units(exponent_bound: u32) -> Self {
        SearchBounds {
            exponent_bound,
            t_height_bound: None,
        }
    }

    fn identity_height(&self) -> u64 {
        self.t_height_bound.unwrap_or(DEFAULT_IDENTITY_HEIGHT)
    }
}

/// S-integers `n / d` with `|n| <= height`, `1 <= d <= height`, `d` a product
/// of primes of S, in ascending order.
pub fn s_integer_grid(ring: &SUnitRing, height: u64) -> Vec<Rational> {
    let mut dens = vec![1u64];
    for &p in ring.primes() {
        let mut next = Vec::new();
        for &d in &dens {
            let mut x = d;
            while x <= height {
                next.push(x);
                match x.checked_mul(p) {
                    Some(y) => x = y,
                    None => break,
                }
            }
        }
        dens = next;
    }
    let h = height as i64;
    let set: BTreeSet<Rational> = dens
        .iter()
        .flat_map(|&d| (-h..=h).map(move |n| Rational::new(BigInt::from(n), BigInt::from(d))))
        .collect();
    set.into_iter().collect()
}

/// Unit-sweep mode.
pub fn unit_sweep(eq: &UnitEquation, ring: &SUnitRing, bounds: &SearchBounds) -> Vec<SolutionTriple> {
    let units = ring.enumerate_units(bounds.exponent_bound);
    let grid = s_integer_grid(ring, bounds.identity_height());
    let found: BTreeSet<SolutionTriple> = units
        .par_iter()
        .flat_map_iter(|u| {
            let fu = eq.f().scale(u);
            let mut local = Vec::new();
            for v in &units {
                let r = &(&fu + &eq.g().scale(v)) - eq.h();
                let ts = if r.is_zero() {
                    grid.clone()
                } else {
                    rational_roots(&r).into_iter().filter(|t| ring.is_s_integer(t)).collect()
                };
                local.extend(ts.into_iter().map(|t| SolutionTriple::new(eq, t, u.clone(), v.clone())));
            }
            local
        })
        .collect();
    found.into_iter().collect()
}

/// `t`-sweep mode over S-integers of height at most `height`. `v` is only
/// bounded when `g(t) = 0` leaves it free.
pub fn t_sweep(eq: &UnitEquation, ring: &SUnitRing, exponent_bound: u32, height: u64) -> Vec<SolutionTriple> {
    let units = ring.enumerate_units(exponent_bound);
    let grid = s_integer_grid(ring, height);
    let found: BTreeSet<SolutionTriple> = grid
        .par_iter()
        .flat_map_iter(|t| {
            let (ft, gt, ht) = (eq.f().evaluate(t), eq.g().evaluate(t), eq.h().evaluate(t));
            let mut local = Vec::new();
            for u in &units {
                let rest = &ht - &ft * u;
                if gt.is_zero() {
                    if rest.is_zero() {
                        local.extend(units.iter().map(|v| SolutionTriple::new(eq, t.clone(), u.clone(), v.clone())));
                    }
                } else {
                    let v = rest / &gt;
                    if ring.is_s_unit(&v) {
                        local.push(SolutionTriple::new(eq, t.clone(), u.clone(), v));
                    }
                }
            }
            local
        })
        .collect();
    found.into_iter().collect()
}

/// Every solution in the box, sorted by `(t, u, v)`. With a `t` height the
/// `t`-sweep results are merged in.
pub fn enumerate_solutions(eq: &UnitEquation, ring: &SUnitRing, bounds: &SearchBounds) -> Vec<SolutionTriple> {
    let mut all: BTreeSet<SolutionTriple> = unit_sweep(eq, ring, bounds).into_iter().collect();
    if let Some(h) = bounds.t_height_bound {
        all.extend(t_sweep(eq, ring, bounds.exponent_bound, h));
    }
    debug_assert!(all.iter().all(|s| eq.is_satisfied(&s.t, &s.u, &s.v)));
    all.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Classification {
    /// In the trivial set at `t0` (index into `CoverageReport::trivial_sets`).
    Trivial { set: usize },
    /// `instantiate(families[family], s) = solution`.
    Family {
        family: usize,
        #[serde(with = "rational_text")]
        s: Rational,
    },
    Exception,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedSolution {
    pub solution: SolutionTriple,
    pub class: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    /// Box searched; absent when the solutions came from elsewhere.
    pub bounds: Option<SearchBounds>,
    pub trivial_sets: Vec<TrivialSolutionSet>,
    pub classified: Vec<ClassifiedSolution>,
    pub exception_list: Vec<SolutionTriple>,
}

impl CoverageReport {
    pub fn solutions(&self) -> impl Iterator<Item = &SolutionTriple> {
        self.classified.iter().map(|c| &c.solution)
    }

    pub fn class_of(&self, sol: &SolutionTriple) -> Option<&Classification> {
        self.classified.iter().find(|c| &c.solution == sol).map(|c| &c.class)
    }
}

/// Trivial sets first, then families in order, the first witness found wins.
pub fn classify(
    eq: &UnitEquation,
    ring: &SUnitRing,
    solutions: &[SolutionTriple],
    families: &[SolutionFamily],
) -> Result<CoverageReport> {
    let trivial_sets = if eq.coprime() {
        trivial_solutions(eq, ring)?
    } else {
        Vec::new()
    };
    let mut sorted = solutions.to_vec();
    sorted.sort();
    sorted.dedup();
    let classified: Vec<ClassifiedSolution> = sorted
        .into_iter()
        .map(|solution| {
            let class = classify_one(eq, ring, &solution, &trivial_sets, families);
            ClassifiedSolution { solution, class }
        })
        .collect();
    let exception_list = classified
        .iter()
        .filter(|c| c.class == Classification::Exception)
        .map(|c| c.solution.clone())
        .collect();
    Ok(CoverageReport {
        bounds: None,
        trivial_sets,
        classified,
        exception_list,
    })
}

fn classify_one(
    eq: &UnitEquation,
    ring: &SUnitRing,
    sol: &SolutionTriple,
    trivial_sets: &[TrivialSolutionSet],
    families: &[SolutionFamily],
) -> Classification {
    if let Some(set) = trivial_sets.iter().position(|t| t.contains(sol)) {
        return Classification::Trivial { set };
    }
    for (family, fam) in families.iter().enumerate() {
        let Some(s) = member(fam, sol, ring) else {
            continue;
        };
        if matches!(instantiate(fam, eq, &s, ring), Ok(Some(ref back)) if back == sol) {
            return Classification::Family { family, s };
        }
    }
    Classification::Exception
}

/// Enumerate inside `bounds`, then classify.
pub fn coverage(
    eq: &UnitEquation,
    ring: &SUnitRing,
    bounds: &SearchBounds,
    families: &[SolutionFamily],
) -> Result<CoverageReport> {
    let sols = enumerate_solutions(eq, ring, bounds);
    let mut report = classify(eq, ring, &sols, families)?;
    report.bounds = Some(*bounds);
    Ok(report)
}

/// Exceptions of `later` that were already solutions in `earlier` but were
/// not exceptions there. Empty when classification is stable.
pub fn reclassified_exceptions(earlier: &CoverageReport, later: &CoverageReport) -> Vec<SolutionTriple> {
    later
        .exception_list
        .iter()
        .filter(|s| earlier.class_of(s).is_some_and(|c| *c != Classification::Exception))
        .cloned()
        .collect()
}

/// Height of a rational: `max(|numerator|, denominator)`.
pub fn height(x: &Rational) -> BigInt {
    x.numer().abs().max(x.denom().clone())
}
