//! Closed-form families, trivial solutions, reductions and the general
//! family search.

mod closed_form;
mod equation;
mod reduce;
mod search;
mod trivial;

pub use closed_form::{linear_families, quadratic_families, ClosedForm, QuadraticCase, QuadraticCaseAnalysis, RootValue};
pub use equation::UnitEquation;
pub use reduce::{check_degree_dominance, dominance_primes, reduce_common_factor, Reduction};
pub use search::{search_families, SearchOutcome};
pub use trivial::{trivial_solutions, TrivialPattern, TrivialSolutionSet};
