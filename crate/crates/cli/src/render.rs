//! Plain-text rendering of the reports.

use std::fmt::Write;

use sunit::oracle::Classification;
use sunit::solvers::{TrivialPattern, TrivialSolutionSet};

use crate::commands::{AnalyzeReport, BezoutReport, CheckReport, EquationText, FamiliesReport, SolveReport};

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn equation_line(out: &mut String, eq: &EquationText) {
    writeln!(out, "equation: ({}) u + ({}) v = {}", eq.f, eq.g, eq.h).unwrap();
}

fn primes_line(out: &mut String, primes: &[u64]) {
    let list: Vec<String> = primes.iter().map(u64::to_string).collect();
    writeln!(out, "S = {{{}}}", list.join(", ")).unwrap();
}

fn diagnostics(out: &mut String, list: &[String]) {
    if !list.is_empty() {
        out.push_str("diagnostics:\n");
        for d in list {
            writeln!(out, "  {d}").unwrap();
        }
    }
}

fn trivial_set(set: &TrivialSolutionSet) -> String {
    let fixed = set.fixed_value.as_ref().map(|x| x.to_string()).unwrap_or_default();
    let shape = match set.pattern {
        TrivialPattern::UFree => format!("u free, v = {fixed}"),
        TrivialPattern::VFree => format!("v free, u = {fixed}"),
        TrivialPattern::RatioLocked => format!("v free, u = {fixed} * v"),
        TrivialPattern::Empty => "no S-unit solutions".to_string(),
    };
    match &set.reason {
        Some(r) => format!("t = {}: {shape} ({r})", set.t0),
        None => format!("t = {}: {shape}", set.t0),
    }
}

pub fn analyze(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    equation_line(&mut out, &r.equation);
    writeln!(out, "coprime: {}", mark(r.coprime)).unwrap();
    writeln!(out, "degree sum: {}", mark(r.degree_sum_matches)).unwrap();
    writeln!(out, "dominant degree unique: {}", mark(r.dominant_degree_unique)).unwrap();
    if let Some(c) = &r.cofactors {
        writeln!(out, "cofactors: ftilde = {}, gtilde = {}", c.ftilde, c.gtilde).unwrap();
    }
    if let Some(d) = &r.divisor_config {
        out.push_str("divisors:\n");
        for c in &d.components {
            write!(out, "  {} type {:?}: {}", c.label, c.bidegree, c.text).unwrap();
            if let Some(n) = &c.note {
                write!(out, " ({n})").unwrap();
            }
            out.push('\n');
        }
    }
    if let Some(gp) = &r.general_position {
        writeln!(out, "general position: {}", mark(gp.in_general_position)).unwrap();
        for v in &gp.violations {
            writeln!(out, "  {} meet at {}", v.triple.join(" "), v.witness).unwrap();
        }
        if let Some(cz) = &gp.cz_configuration {
            writeln!(out, "  configuration {} at {}", cz.triple.join(" "), cz.point).unwrap();
        }
    }
    if let Some(c) = &r.candidates {
        writeln!(out, "candidates for (m, n) = ({}, {}):", c.m, c.n).unwrap();
        for k in &c.list {
            writeln!(out, "  type {:?}, endpoints {}", k.bidegree, k.endpoint_config).unwrap();
        }
    }
    if let Some(g) = r.genericity_prediction {
        writeln!(out, "genericity prediction: {g}").unwrap();
    }
    diagnostics(&mut out, &r.diagnostics);
    out
}

pub fn bezout(r: &BezoutReport) -> String {
    format!("ftilde = {}\ngtilde = {}\n", r.ftilde, r.gtilde)
}

pub fn families(r: &FamiliesReport) -> String {
    let mut out = String::new();
    equation_line(&mut out, &r.equation);
    primes_line(&mut out, &r.primes);
    if r.reduced.f != r.equation.f || r.reduced.g != r.equation.g || r.reduced.h != r.equation.h {
        out.push_str("reduced ");
        equation_line(&mut out, &r.reduced);
    }
    if let Some(a) = &r.analysis {
        writeln!(out, "case: {:?}, discriminant {}, roots {} and {}", a.case, a.discriminant, a.r1, a.r2).unwrap();
    }
    if let Some(s) = &r.search {
        writeln!(
            out,
            "search: deg z <= {} (requested {}), {} new famil{}",
            s.searched_max_deg_z,
            s.requested_max_deg_z,
            s.found,
            if s.found == 1 { "y" } else { "ies" }
        )
        .unwrap();
    }
    out.push_str("families:\n");
    for f in &r.families {
        write!(out, "  {}: {}", f.label, f.text).unwrap();
        if f.empty_over_ring {
            out.push_str(" [empty over the given S]");
        }
        if let Some(n) = &f.note {
            write!(out, " ({n})").unwrap();
        }
        out.push('\n');
    }
    for s in &r.surd_families {
        writeln!(out, "  {}", s.text).unwrap();
    }
    if !r.trivial_sets.is_empty() {
        out.push_str("trivial solutions:\n");
        for t in &r.trivial_sets {
            writeln!(out, "  {}", trivial_set(t)).unwrap();
        }
    }
    diagnostics(&mut out, &r.diagnostics);
    out
}

pub fn solve(r: &SolveReport) -> String {
    let mut out = String::new();
    equation_line(&mut out, &r.equation);
    primes_line(&mut out, &r.primes);
    write!(out, "exponent bound {}", r.bounds.exponent_bound).unwrap();
    if let Some(h) = r.bounds.t_height_bound {
        write!(out, ", t height {h}").unwrap();
    }
    writeln!(out, "\n{} solutions", r.count).unwrap();
    for s in &r.solutions {
        writeln!(out, "  {}{}", s, if s.trivial { "  trivial" } else { "" }).unwrap();
    }
    out
}

pub fn check(r: &CheckReport) -> String {
    let mut out = String::new();
    equation_line(&mut out, &r.equation);
    primes_line(&mut out, &r.primes);
    writeln!(out, "families ({}):", r.family_source).unwrap();
    for f in &r.families {
        writeln!(out, "  {}: {}", f.label, f.text).unwrap();
    }
    let s = &r.summary;
    writeln!(
        out,
        "{} solutions: {} trivial, {} in families, {} exceptions",
        s.solutions, s.trivial, s.family, s.exceptions
    )
    .unwrap();
    for c in &r.coverage.classified {
        let class = match &c.class {
            Classification::Trivial { set } => format!("trivial at t = {}", r.coverage.trivial_sets[*set].t0),
            Classification::Family { family, s } => format!("{} at s = {s}", r.families[*family].label),
            Classification::Exception => "exception".to_string(),
        };
        writeln!(out, "  {}  {class}", c.solution).unwrap();
    }
    if !r.coverage.exception_list.is_empty() {
        out.push_str("exceptions:\n");
        for e in &r.coverage.exception_list {
            writeln!(out, "  {e}").unwrap();
        }
    }
    diagnostics(&mut out, &r.diagnostics);
    out
}
