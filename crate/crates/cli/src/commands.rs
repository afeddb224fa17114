use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sunit::bezout::{compute_cofactors, BezoutCofactors};
use sunit::exactmath::Polynomial;
use sunit::families::{equivalence_scale, EmittedFamily, FamilyBody, SolutionFamily, SolutionTriple};
use sunit::geometry::{
    build_divisor_config, check_general_position, enumerate_exceptional_candidates, genericity_prediction,
    CurveCandidate, DivisorConfig, GeneralPositionReport,
};
use sunit::oracle::{coverage, enumerate_solutions, CoverageReport, SearchBounds};
use sunit::solvers::{
    check_degree_dominance, linear_families, quadratic_families, reduce_common_factor, search_families,
    trivial_solutions, QuadraticCaseAnalysis, Reduction, TrivialSolutionSet, UnitEquation,
};
use sunit::sring::SUnitRing;
use sunit::Error;

use crate::render;
use crate::{BoundArgs, Command, EquationArgs, Format, PrimeArgs, SearchArgs};

pub const SCHEMA_VERSION: u32 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const UNSUPPORTED: u8 = 3;

pub struct Output {
    pub text: String,
    pub status: u8,
}

/// Equation echoed back in canonical form.
#[derive(Serialize)]
pub struct EquationText {
    pub f: String,
    pub g: String,
    pub h: String,
}

impl EquationText {
    fn of(eq: &UnitEquation) -> Self {
        EquationText {
            f: eq.f().to_string(),
            g: eq.g().to_string(),
            h: eq.h().to_string(),
        }
    }
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub equation: EquationText,
    pub coprime: bool,
    pub degree_sum_matches: bool,
    pub dominant_degree_unique: bool,
    pub reduction: Reduction,
    pub cofactors: Option<BezoutCofactors>,
    pub divisor_config: Option<DivisorConfig>,
    pub general_position: Option<GeneralPositionReport>,
    pub candidates: Option<Candidates>,
    pub genericity_prediction: Option<bool>,
    pub diagnostics: Vec<String>,
}

#[derive(Serialize)]
pub struct Candidates {
    pub m: usize,
    pub n: usize,
    pub list: Vec<CurveCandidate>,
}

#[derive(Serialize)]
pub struct BezoutReport {
    pub equation: EquationText,
    pub ftilde: Polynomial,
    pub gtilde: Polynomial,
}

/// One family as it appears in machine output; `check --families-file`
/// reads the `family` field back.
#[derive(Serialize, Deserialize)]
pub struct FamilyEntry {
    pub label: String,
    pub text: String,
    pub family: SolutionFamily,
    pub empty_over_ring: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// A family with irrational coefficients. Not usable for classification.
#[derive(Serialize)]
pub struct SurdEntry {
    pub label: String,
    pub text: String,
}

#[derive(Serialize)]
pub struct SearchSummary {
    pub requested_max_deg_z: usize,
    pub searched_max_deg_z: usize,
    pub found: usize,
}

#[derive(Serialize)]
pub struct FamiliesReport {
    pub equation: EquationText,
    pub primes: Vec<u64>,
    /// The equation the families describe, after common factors are removed.
    pub reduced: EquationText,
    pub reduction: Reduction,
    pub analysis: Option<QuadraticCaseAnalysis>,
    pub families: Vec<FamilyEntry>,
    pub surd_families: Vec<SurdEntry>,
    pub search: Option<SearchSummary>,
    pub trivial_sets: Vec<TrivialSolutionSet>,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub unsupported: bool,
}

#[derive(Serialize)]
pub struct SolveReport {
    pub equation: EquationText,
    pub primes: Vec<u64>,
    pub bounds: SearchBounds,
    pub count: usize,
    pub solutions: Vec<SolutionTriple>,
}

#[derive(Serialize)]
pub struct Summary {
    pub solutions: usize,
    pub trivial: usize,
    pub family: usize,
    pub exceptions: usize,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub equation: EquationText,
    pub primes: Vec<u64>,
    pub family_source: String,
    pub families: Vec<FamilyEntry>,
    pub summary: Summary,
    pub coverage: CoverageReport,
    pub diagnostics: Vec<String>,
}

fn flag_error(flag: &str, e: Error) -> String {
    format!("{flag}: {e}")
}

fn parse_poly(flag: &str, text: &str) -> Result<Polynomial, String> {
    text.parse().map_err(|e| flag_error(flag, e))
}

fn parse_equation(args: &EquationArgs) -> Result<(Polynomial, Polynomial, Polynomial), String> {
    Ok((parse_poly("--f", &args.f)?, parse_poly("--g", &args.g)?, parse_poly("--h", &args.h)?))
}

fn equation(args: &EquationArgs) -> Result<UnitEquation, String> {
    let (f, g, h) = parse_equation(args)?;
    UnitEquation::new(f, g, h).map_err(|e| flag_error("--f/--g/--h", e))
}

fn ring(args: &PrimeArgs) -> Result<SUnitRing, String> {
    args.primes.parse().map_err(|e| flag_error("--primes", e))
}

fn emit<T: Serialize>(format: Format, command: &str, body: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Machine => {
            let doc = Document {
                schema_version: SCHEMA_VERSION,
                command,
                body,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(body),
    }
}

pub fn run(command: Command) -> Result<Output, String> {
    match command {
        Command::Analyze(eq) => {
            let report = analyze(&eq)?;
            Ok(Output {
                text: emit(eq.format, "analyze", &report, render::analyze),
                status: 0,
            })
        }
        Command::Bezout(eq) => {
            let e = equation(&eq)?;
            let c = compute_cofactors(e.f(), e.g(), e.h()).map_err(|err| flag_error("--f/--g", err))?;
            let report = BezoutReport {
                equation: EquationText::of(&e),
                ftilde: c.ftilde,
                gtilde: c.gtilde,
            };
            Ok(Output {
                text: emit(eq.format, "bezout", &report, render::bezout),
                status: 0,
            })
        }
        Command::Families { eq, primes, search } => {
            let report = families(&eq, &ring(&primes)?, &search)?;
            let status = if report.unsupported { UNSUPPORTED } else { 0 };
            Ok(Output {
                text: emit(eq.format, "families", &report, render::families),
                status,
            })
        }
        Command::Solve { eq, primes, bounds } => {
            let e = equation(&eq)?;
            let r = ring(&primes)?;
            let b = search_bounds(&bounds);
            let solutions = enumerate_solutions(&e, &r, &b);
            let report = SolveReport {
                equation: EquationText::of(&e),
                primes: r.primes().to_vec(),
                bounds: b,
                count: solutions.len(),
                solutions,
            };
            Ok(Output {
                text: emit(eq.format, "solve", &report, render::solve),
                status: 0,
            })
        }
        Command::Check {
            eq,
            primes,
            bounds,
            search,
            families_file,
        } => {
            let (report, status) = check(&eq, &ring(&primes)?, &bounds, &search, families_file.as_deref())?;
            Ok(Output {
                text: emit(eq.format, "check", &report, render::check),
                status,
            })
        }
    }
}

fn search_bounds(b: &BoundArgs) -> SearchBounds {
    SearchBounds {
        exponent_bound: b.exp_bound,
        t_height_bound: b.t_height,
    }
}

fn analyze(args: &EquationArgs) -> Result<AnalyzeReport, String> {
    let e = equation(args)?;
    let reduction = reduce_common_factor(e.f(), e.g(), e.h()).map_err(|err| flag_error("--f/--g/--h", err))?;
    let mut diagnostics = Vec::new();
    let work = if e.coprime() {
        e.clone()
    } else {
        diagnostics.push("f and g share a zero; the geometry below is for the reduced equation".into());
        reduction.equation.clone()
    };
    let cofactors = match compute_cofactors(work.f(), work.g(), work.h()) {
        Ok(c) => Some(c),
        Err(err) => {
            diagnostics.push(format!("cofactors: {err}"));
            None
        }
    };
    let divisor_config = cofactors.as_ref().and_then(|c| match build_divisor_config(work.f(), work.g(), c) {
        Ok(d) => Some(d),
        Err(err) => {
            diagnostics.push(format!("divisors: {err}"));
            None
        }
    });
    let general_position = divisor_config.as_ref().map(check_general_position);
    let (df, dg) = (work.f().degree().unwrap_or(0), work.g().degree().unwrap_or(0));
    let (m, n) = (df.max(dg), df.min(dg));
    let candidates = match enumerate_exceptional_candidates(m, n) {
        Ok(list) => Some(Candidates { m, n, list }),
        Err(err) => {
            diagnostics.push(format!("candidates: {err}"));
            None
        }
    };
    let genericity_prediction = candidates.as_ref().map(|c| genericity_prediction(c.m, c.n));
    if !e.degree_sum_matches() {
        diagnostics.push("deg h differs from deg f + deg g; the divisor picture assumes equality".into());
    }
    Ok(AnalyzeReport {
        equation: EquationText::of(&e),
        coprime: e.coprime(),
        degree_sum_matches: e.degree_sum_matches(),
        dominant_degree_unique: check_degree_dominance(&e),
        reduction,
        cofactors,
        divisor_config,
        general_position,
        candidates,
        genericity_prediction,
        diagnostics,
    })
}

fn entry(label: String, fam: SolutionFamily, empty_over_ring: bool, note: Option<String>) -> FamilyEntry {
    FamilyEntry {
        text: fam.to_string(),
        label,
        family: fam,
        empty_over_ring,
        note,
    }
}

fn families(args: &EquationArgs, ring: &SUnitRing, search: &SearchArgs) -> Result<FamiliesReport, String> {
    let e = equation(args)?;
    let reduction = reduce_common_factor(e.f(), e.g(), e.h()).map_err(|err| flag_error("--f/--g/--h", err))?;
    let work = reduction.equation.clone();
    let mut diagnostics = Vec::new();
    if !reduction.d.is_constant() || !reduction.common_all.is_constant() {
        diagnostics.push(format!(
            "families are for the reduced equation; required primes: {:?}",
            reduction.required_primes.primes
        ));
        let missing = reduction.missing_primes(ring);
        if !missing.is_empty() {
            diagnostics.push(format!("primes {missing:?} are not in S"));
        }
    }

    let degrees = (work.f().degree(), work.g().degree(), work.h().degree());
    let closed = match degrees {
        (Some(1), Some(1), Some(2)) => Some(quadratic_families(work.f(), work.g(), work.h(), ring)),
        (Some(1), Some(1), Some(1)) => Some(linear_families(work.f(), work.g(), work.h(), ring)),
        _ => None,
    };
    let mut analysis = None;
    let mut entries = Vec::new();
    let mut surd = Vec::new();
    let mut have_source = false;
    match closed {
        Some(Ok(cf)) => {
            have_source = true;
            analysis = cf.analysis;
            diagnostics.extend(cf.diagnostics);
            for EmittedFamily {
                label,
                body,
                empty_over_ring,
                note,
            } in cf.families
            {
                match body {
                    FamilyBody::Rational(f) => entries.push(entry(label, f, empty_over_ring, note)),
                    FamilyBody::Surd(_) => {
                        let text = EmittedFamily {
                            label: label.clone(),
                            body,
                            empty_over_ring,
                            note,
                        }
                        .to_string();
                        surd.push(SurdEntry { label, text });
                    }
                }
            }
        }
        Some(Err(err)) => diagnostics.push(format!("closed forms: {err}")),
        None => diagnostics.push(format!(
            "no closed form for degrees (deg f, deg g, deg h) = ({}, {}, {})",
            degrees.0.unwrap_or(0),
            degrees.1.unwrap_or(0),
            degrees.2.unwrap_or(0)
        )),
    }

    let mut unsupported = false;
    let mut summary = None;
    if let Some(max) = search.search_max_dz {
        match search_families(&work, max) {
            Ok(out) => {
                have_source = true;
                let mut added = 0;
                for fam in out.families {
                    if entries.iter().any(|e| equivalence_scale(&e.family, &fam).is_some()) {
                        continue;
                    }
                    added += 1;
                    entries.push(entry(format!("search-{added}"), fam, false, None));
                }
                diagnostics.extend(out.diagnostics.into_iter().map(|d| format!("search: {d}")));
                summary = Some(SearchSummary {
                    requested_max_deg_z: max,
                    searched_max_deg_z: out.max_deg_z,
                    found: added,
                });
            }
            Err(err) => {
                unsupported |= matches!(err, Error::Unsupported(_));
                diagnostics.push(format!("search: {err}"));
            }
        }
    }
    if !have_source {
        unsupported = true;
        if search.search_max_dz.is_none() {
            diagnostics.push("pass --search-max-dz to run the general search".into());
        }
    }

    let trivial_sets = trivial_solutions(&work, ring).map_err(|err| flag_error("--f/--g/--h", err))?;
    Ok(FamiliesReport {
        equation: EquationText::of(&e),
        primes: ring.primes().to_vec(),
        reduced: EquationText::of(&work),
        reduction,
        analysis,
        families: entries,
        surd_families: surd,
        search: summary,
        trivial_sets,
        diagnostics,
        unsupported,
    })
}

/// Families from either a `families` machine document or a bare array.
fn read_families_file(path: &Path) -> Result<Vec<FamilyEntry>, String> {
    let bad = |what: String| format!("--families-file {}: {what}", path.display());
    let raw = fs::read_to_string(path).map_err(|e| bad(e.to_string()))?;
    let doc: Value = serde_json::from_str(&raw).map_err(|e| bad(e.to_string()))?;
    let list = match doc {
        Value::Array(items) => items,
        Value::Object(mut map) => match map.remove("families") {
            Some(Value::Array(items)) => items,
            _ => return Err(bad("expected a `families` array".into())),
        },
        _ => return Err(bad("expected a JSON array or object".into())),
    };
    list.into_iter()
        .enumerate()
        .map(|(i, item)| {
            if item.get("family").is_some() {
                serde_json::from_value::<FamilyEntry>(item)
            } else {
                serde_json::from_value::<SolutionFamily>(item).map(|f| entry(format!("file-{}", i + 1), f, false, None))
            }
            .map_err(|e| bad(format!("entry {}: {e}", i + 1)))
        })
        .collect()
}

fn check(
    args: &EquationArgs,
    ring: &SUnitRing,
    bounds: &BoundArgs,
    search: &SearchArgs,
    file: Option<&Path>,
) -> Result<(CheckReport, u8), String> {
    let e = equation(args)?;
    if !e.coprime() {
        return Err("--f/--g: f and g share a zero; remove the common factor first".into());
    }
    let mut diagnostics = Vec::new();
    let mut status = 0;
    let (entries, source) = match file {
        Some(path) => (read_families_file(path)?, format!("file {}", path.display())),
        None => {
            let report = families(args, ring, search)?;
            if report.unsupported {
                status = UNSUPPORTED;
            }
            diagnostics.extend(report.diagnostics);
            if !report.surd_families.is_empty() {
                let n = report.surd_families.len();
                diagnostics.push(format!("irrational families take no part in classification ({n} skipped)"));
            }
            (report.families, "generated".to_string())
        }
    };
    let fams: Vec<SolutionFamily> = entries.iter().map(|x| x.family.clone()).collect();
    for (x, f) in entries.iter().zip(&fams) {
        if !sunit::families::verify_family(f, &e) {
            diagnostics.push(format!("{}: does not satisfy the equation identically", x.label));
        }
    }
    let report = coverage(&e, ring, &search_bounds(bounds), &fams).map_err(|err| flag_error("--f/--g/--h", err))?;
    let mut summary = Summary {
        solutions: report.classified.len(),
        trivial: 0,
        family: 0,
        exceptions: report.exception_list.len(),
    };
    for c in &report.classified {
        match c.class {
            sunit::oracle::Classification::Trivial { .. } => summary.trivial += 1,
            sunit::oracle::Classification::Family { .. } => summary.family += 1,
            sunit::oracle::Classification::Exception => {}
        }
    }
    Ok((
        CheckReport {
            equation: EquationText::of(&e),
            primes: ring.primes().to_vec(),
            family_source: source,
            families: entries,
            summary,
            coverage: report,
            diagnostics,
        },
        status,
    ))
}
