//! Parametrized solution families for one-parameter S-unit equations
//! `f(t) u + g(t) v = h(t)` over the rationals.

pub mod bezout;
pub mod exactmath;
pub mod families;
pub mod geometry;
pub mod oracle;
pub mod solvers;
pub mod sring;

mod error;

pub use error::{Error, Result};

/// The guide's code blocks, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/s-units.md")]
    mod s_units {}
    #[doc = include_str!("../../../book/src/cofactors.md")]
    mod cofactors {}
    #[doc = include_str!("../../../book/src/divisors.md")]
    mod divisors {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
    #[doc = include_str!("../../../book/src/coverage.md")]
    mod coverage {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
