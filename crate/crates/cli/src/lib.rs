//! Command-line front end for `padic-core`: `eval`, `table` and `verify`.
//!
//! ```text
//! padic <command> <target?> [--p P] [--n N | --n A..B] [--k K]
//!       [--format text|json|csv] [--cap N]
//! ```
//!
//! Exit codes: 0 success, 1 `verify` found a failing case, 2 usage error,
//! 3 internal inconsistency (an exact-division or route-agreement check
//! tripped).

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use padic_core::oracle::OracleConfig;
use padic_core::Prime;

pub mod eval;
mod output;
pub mod query;
pub mod verify;

use eval::{evaluate, Inputs};
use query::{parse_prime, Argument, NSpec, Target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENCY: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] padic_core::Error),
    #[error("output error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_inconsistency() => EXIT_INCONSISTENCY,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "padic", version, about = "p-adic valuations and weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Prime base
    #[arg(long = "p", value_name = "P")]
    p: Option<String>,
    /// A single value (any size) or a closed range A..B
    #[arg(long = "n", value_name = "N|A..B")]
    n: Option<String>,
    /// Secondary parameter (exponent, scale or step count)
    #[arg(long = "k", value_name = "K")]
    k: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Oracle index cap, applied to every oracle kind
    #[arg(long, value_name = "N")]
    cap: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one target at one point
    Eval {
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate one target for every n in a range
    Table {
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep identities over a grid and report failures
    Verify {
        /// Identity name, or `all`
        #[arg(default_value = "all")]
        identity: String,
        #[command(flatten)]
        common: Common,
    },
    /// List targets and identities
    List,
}

impl Common {
    fn prime(&self) -> Result<Option<Prime>, CliError> {
        self.p.as_deref().map(parse_prime).transpose()
    }

    fn oracle(&self) -> OracleConfig {
        match self.cap {
            Some(cap) => OracleConfig {
                factorial_cap: cap,
                special_cap: cap,
            },
            None => OracleConfig::default(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
///
/// Results go to `out`; diagnostics and timings go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Eval { target, common } => {
            let target: Target = target.parse()?;
            let prime = common.prime()?;
            check_required(target, prime.as_ref(), &common)?;
            if matches!(common.n.as_deref().map(NSpec::parse), Some(Ok(NSpec::Range(_)))) {
                return Err(CliError::Usage("eval takes a single --n; use `table` for ranges".into()));
            }
            let inputs = Inputs {
                p: prime.as_ref(),
                n: common.n.as_deref(),
                k: common.k.as_deref(),
                oracle: common.oracle(),
            };
            let value = evaluate(target, &inputs)?;
            output::eval(out, common.format, target, prime.as_ref(), &inputs, &value)?;
            Ok(EXIT_OK)
        }
        Command::Table { target, common } => {
            let target: Target = target.parse()?;
            let prime = common.prime()?;
            check_required(target, prime.as_ref(), &common)?;
            let range = match target.argument() {
                Argument::Ratio | Argument::None => {
                    return Err(CliError::Usage(format!("{target} cannot be tabulated over n")))
                }
                _ => {
                    let raw = common
                        .n
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("table requires --n A..B".into()))?;
                    NSpec::parse(raw)?.as_range()?
                }
            };
            let odd_only = target.argument() == Argument::Odd;
            let mut rows = Vec::new();
            for n in range.iter().filter(|n| !odd_only || n % 2 == 1) {
                let n_text = n.to_string();
                let inputs = Inputs {
                    p: prime.as_ref(),
                    n: Some(&n_text),
                    k: common.k.as_deref(),
                    oracle: common.oracle(),
                };
                rows.push((n, evaluate(target, &inputs)?));
            }
            output::table(out, common.format, target, prime.as_ref(), common.k.as_deref(), &rows)?;
            Ok(EXIT_OK)
        }
        Command::Verify { identity, common } => {
            let overrides = verify::Overrides {
                primes: common.prime()?.map(|p| vec![p]),
                n: common.n.as_deref().map(|s| NSpec::parse(s)?.as_range()).transpose()?,
                k_max: common.k.as_deref().map(|k| query::parse_u64(k, "k")).transpose()?,
                oracle: common.oracle(),
            };
            let reports = verify::run(&identity, &overrides)?;
            output::verify(out, common.format, &reports)?;
            for report in &reports {
                writeln!(
                    err,
                    "{}: {:.3}s",
                    report.identity,
                    report.elapsed.as_secs_f64()
                )?;
            }
            Ok(if reports.iter().any(|r| !r.inconsistencies.is_empty()) {
                EXIT_INCONSISTENCY
            } else if reports.iter().any(|r| !r.failures.is_empty()) {
                EXIT_IDENTITY_FAILURE
            } else {
                EXIT_OK
            })
        }
        Command::List => {
            writeln!(out, "targets:")?;
            for t in Target::ALL {
                writeln!(out, "  {t}")?;
            }
            writeln!(out, "identities:")?;
            for i in verify::IDENTITIES {
                writeln!(out, "  {:<22} {}", i.name, i.summary)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn check_required(target: Target, prime: Option<&Prime>, common: &Common) -> Result<(), CliError> {
    if target.needs_prime() && prime.is_none() {
        return Err(CliError::Usage(format!("{target} requires --p")));
    }
    if target.needs_k() && common.k.is_none() {
        return Err(CliError::Usage(format!("{target} requires --k")));
    }
    Ok(())
}
