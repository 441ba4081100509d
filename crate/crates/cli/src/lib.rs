//! Command-line front end for `cdpoly`: JSON documents in, JSON reports out.

pub mod commands;
pub mod doc;
pub mod error;
pub mod snail;
pub mod verify;

use std::path::PathBuf;

use cdpoly::roots::FinderOptions;
use cdpoly::DEFAULT_TOL;
use clap::{Parser, Subcommand, ValueEnum};

use crate::doc::{CandidatesDocument, ElementDocument, PolynomialDocument};
use crate::error::{CliError, CliResult};
use crate::snail::SnailOptions;
use crate::verify::Mutant;

pub const TOL_ENV: &str = "CDPOLY_TOL";

#[derive(Parser, Debug)]
#[command(name = "cdpoly", version, about = "Polynomials over Cayley-Dickson algebras")]
pub struct Cli {
    /// Numerical tolerance. Overrides CDPOLY_TOL.
    #[arg(long, global = true)]
    pub tol: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a polynomial at an element.
    Eval {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        at: PathBuf,
        /// Also report the companion polynomial and its value.
        #[arg(long)]
        companion: bool,
    },
    /// Spherical root classes, central roots and the deflated core.
    Spherical {
        #[arg(long)]
        poly: PathBuf,
        /// Test these classes instead of the companion-derived ones.
        #[arg(long)]
        candidates: Option<PathBuf>,
    },
    /// Cauchy-type root bounds R1, R2, R3.
    Bounds {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Largest root modulus, from the companion polynomial.
    Rho {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Gauss-Lucas check of the spherical critical classes.
    Glucas {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Jensen sphere check for real-coefficient polynomials.
    Jensen {
        #[arg(long)]
        poly: PathBuf,
        /// Build the spheres from the companion polynomial instead.
        #[arg(long)]
        companion: bool,
    },
    /// Sample complex slices of the snail.
    Snail {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        slices: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Replay the built-in worked examples.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Paper)]
        suite: Suite,
        #[arg(long, value_enum, hide = true)]
        mutant: Option<Mutant>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paper,
}

/// The flag wins over the environment; both must be positive and finite.
pub fn resolve_tol(flag: Option<&str>, env: Option<&str>) -> CliResult<f64> {
    let (raw, source) = match (flag, env) {
        (Some(f), _) => (f, "--tol"),
        (None, Some(e)) => (e, TOL_ENV),
        (None, None) => return Ok(DEFAULT_TOL),
    };
    match raw.trim().parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(CliError::Parse(format!(
            "{source}: expected a positive number, got {raw:?}"
        ))),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let env = std::env::var(TOL_ENV).ok();
    let tol = resolve_tol(cli.tol.as_deref(), env.as_deref())?;
    let opts = FinderOptions::with_tol(tol);
    let out = match &cli.command {
        Command::Eval { poly, at, companion } => commands::eval(
            &PolynomialDocument::load(poly)?,
            &ElementDocument::load(at)?,
            *companion,
            tol,
        )?,
        Command::Spherical { poly, candidates } => {
            let cands = candidates.as_deref().map(CandidatesDocument::load).transpose()?;
            commands::spherical(&PolynomialDocument::load(poly)?, cands.as_ref(), &opts)?
        }
        Command::Bounds { poly } => commands::bounds(&PolynomialDocument::load(poly)?, tol)?,
        Command::Rho { poly } => commands::rho(&PolynomialDocument::load(poly)?, &opts)?,
        Command::Glucas { poly } => commands::glucas(&PolynomialDocument::load(poly)?, &opts)?,
        Command::Jensen { poly, companion } => commands::jensen(&PolynomialDocument::load(poly)?, *companion, &opts)?,
        Command::Snail {
            poly,
            slices,
            seed,
            svg,
            csv,
        } => {
            let snail_opts = SnailOptions {
                slices: *slices,
                seed: *seed,
                svg: svg.as_deref(),
                csv: csv.as_deref(),
            };
            snail::snail(&PolynomialDocument::load(poly)?, &snail_opts, &opts)?
        }
        Command::Verify {
            suite: Suite::Paper,
            mutant,
        } => {
            let results = verify::run_suite(*mutant);
            let table = verify::render(&results);
            let failed = results.iter().filter(|r| r.outcome.is_err()).count();
            if failed > 0 {
                eprint!("{table}");
                return Err(CliError::Verification {
                    failed,
                    total: results.len(),
                });
            }
            return Ok(table.trim_end().to_string());
        }
    };
    Ok(pretty(&out))
}
