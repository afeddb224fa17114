//! `sunit`: analysis, closed-form families, family search and brute-force
//! coverage for `f(t) u + g(t) v = h(t)`.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "sunit", version, about = "Parametrized solutions of f(t) u + g(t) v = h(t) over S-units")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Divisor configuration, general position and exceptional-curve candidates.
    Analyze(EquationArgs),
    /// Cofactors f~, g~ with f g~ + g f~ = h.
    Bezout(EquationArgs),
    /// Closed-form families, optionally extended by the general search.
    Families {
        #[command(flatten)]
        eq: EquationArgs,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Every solution inside a box.
    Solve {
        #[command(flatten)]
        eq: EquationArgs,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Solve, then classify each solution as trivial, family member or exception.
    Check {
        #[command(flatten)]
        eq: EquationArgs,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Classify against these families (a `families` machine document or
        /// a JSON array of families) instead of generating them.
        #[arg(long, value_name = "PATH")]
        families_file: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
pub struct EquationArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    #[arg(long, allow_hyphen_values = true)]
    pub h: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args)]
pub struct PrimeArgs {
    /// Comma-separated primes, or `none`.
    #[arg(long, default_value = "none")]
    pub primes: String,
}

#[derive(Args)]
pub struct SearchArgs {
    /// Also run the general search up to this degree of z.
    #[arg(long, value_name = "N")]
    pub search_max_dz: Option<usize>,
}

#[derive(Args)]
pub struct BoundArgs {
    /// Bound on every prime exponent of u and v.
    #[arg(long, value_name = "B")]
    pub exp_bound: u32,
    /// Also sweep S-integers t of height at most H.
    #[arg(long, value_name = "H")]
    pub t_height: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::INPUT_ERROR)
        }
    }
}
