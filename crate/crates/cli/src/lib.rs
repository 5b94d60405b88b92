//! Command-line front end for `permgrp`: group files, reports, and the
//! verification suites behind the `permgrp` binary.

pub mod commands;
pub mod format;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, Options, Route};
use report::Report;

/// Environment variable overriding the default group-order cap.
pub const CAP_ENV: &str = "PERMGRP_CAP";

#[derive(Debug, Parser)]
#[command(name = "permgrp", version, about = "Exact permutation-group checks for small degrees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    /// Largest group order to enumerate (default 10000, or $PERMGRP_CAP).
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    /// Run the degree 7 suites.
    #[arg(long, global = true)]
    pub slow: bool,

    /// Record wall times per check (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    K2,
    K3,
    K4,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::K2 => Route::K2,
            RouteArg::K3 => Route::K3,
            RouteArg::K4 => Route::K4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Proposition {
    /// Simplicity of A_n through an Iwasawa route.
    AnSimple,
    /// Normal subgroups of S_n.
    SnNormal,
    /// Derived subgroups of S_n and A_n.
    Commutators,
    /// Primitivity of k-subset actions and maximal stabilizers.
    PropMaximal,
    /// The Iwasawa criterion on the standard subset families.
    Iwasawa,
    /// The Sylow 2-subgroup of A_4.
    KleinSylow,
    /// Cycle-type counts and centralizers.
    ClassCount,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        id: Proposition,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum)]
        route: Option<RouteArg>,
    },
    /// Tabulate cycle types of S_n: formula, census and centralizer order.
    Classes {
        #[arg(long)]
        n: usize,
    },
    /// Transitivity, primitivity and a block witness for an action.
    Blocks {
        /// S<n>, A<n>, or a group file.
        #[arg(long)]
        group: String,
        /// natural or subsets(n,k).
        #[arg(long, conflicts_with = "k")]
        action: Option<String>,
        /// Shorthand for subsets(n,k).
        #[arg(long)]
        k: Option<usize>,
    },
}

fn reject(flag: &str, given: bool, id: &str) -> Result<(), CliError> {
    if given {
        return Err(CliError::Usage(format!("{flag} does not apply to verify {id}")));
    }
    Ok(())
}

/// Runs a parsed command line. `echo` is the command as typed, minus the
/// program name.
pub fn run(cli: &Cli, echo: &str, default_cap: usize) -> Result<Report, CliError> {
    let opts = Options { cap: cli.cap.unwrap_or(default_cap), slow: cli.slow, timings: cli.timings };
    match &cli.command {
        Command::Verify { id, n, k, route } => {
            let route: Option<Route> = route.map(Into::into);
            match id {
                Proposition::AnSimple => {
                    reject("--k", k.is_some(), "an-simple")?;
                    commands::verify_an_simple(echo, &opts, n.unwrap_or(5), route.unwrap_or(Route::K3))
                }
                Proposition::SnNormal => {
                    reject("--k", k.is_some(), "sn-normal")?;
                    reject("--route", route.is_some(), "sn-normal")?;
                    commands::verify_sn_normal(echo, &opts, n.unwrap_or(5))
                }
                Proposition::Commutators => {
                    reject("--k", k.is_some(), "commutators")?;
                    reject("--route", route.is_some(), "commutators")?;
                    commands::verify_commutators(echo, &opts, *n)
                }
                Proposition::PropMaximal => {
                    reject("--route", route.is_some(), "prop-maximal")?;
                    commands::verify_prop_maximal(echo, &opts, n.unwrap_or(5), k.unwrap_or(2))
                }
                Proposition::Iwasawa => {
                    reject("--k", k.is_some(), "iwasawa")?;
                    commands::verify_iwasawa(echo, &opts, *n, route)
                }
                Proposition::KleinSylow => {
                    reject("--n", n.is_some(), "klein-sylow")?;
                    reject("--k", k.is_some(), "klein-sylow")?;
                    reject("--route", route.is_some(), "klein-sylow")?;
                    commands::verify_klein_sylow_suite(echo, &opts)
                }
                Proposition::ClassCount => {
                    reject("--k", k.is_some(), "class-count")?;
                    reject("--route", route.is_some(), "class-count")?;
                    commands::verify_class_count(echo, &opts, n.unwrap_or(5))
                }
            }
        }
        Command::Classes { n } => commands::classes(echo, &opts, *n),
        Command::Blocks { group, action, k } => commands::blocks(echo, &opts, group, action.as_deref(), *k),
    }
}

/// The cap from `$PERMGRP_CAP`, falling back to the library default.
pub fn default_cap() -> Result<usize, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{CAP_ENV}={v:?} is not a valid group order"))),
        Err(_) => Ok(permgrp::DEFAULT_ORDER_CAP),
    }
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => report.to_json(),
    }
}
