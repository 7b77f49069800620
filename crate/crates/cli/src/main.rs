//! Command-line front end for exact computations on linear systems of
//! binary forms and their Poncelet hypersurfaces.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "ponsyz",
    version,
    about = "Syzygies of binary forms and Poncelet hypersurfaces"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Syzygies of degree d: their number and a basis.
    Syzygy {
        #[arg(long)]
        system: String,
        #[arg(short)]
        d: usize,
    },
    /// Splitting type of the kernel bundle and the table of r(d).
    Splitting {
        #[arg(long)]
        system: String,
    },
    /// Factor the Poncelet equation along the base points.
    Basepoints {
        #[arg(long)]
        system: String,
        /// Base points `a:b,...` with multiplicity; detected when omitted.
        #[arg(long)]
        points: Option<String>,
    },
    /// Poncelet matrix and canonical equation.
    Poncelet {
        #[arg(long)]
        system: String,
        /// Polynomial (one line) or matrix (one row per line, entries
        /// separated by commas) to test for proportionality.
        #[arg(long)]
        compare: Option<String>,
    },
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Codimension of syzygy strata, three ways.
    Dime {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        d: usize,
    },
    /// Lines and singular vertices of a configuration.
    Teorema(ConfigArgs),
    /// Osculating factors at planted base points.
    Tpenc(ConfigArgs),
    /// Zero loci of a section with the given roots.
    Prozero(ConfigArgs),
}

#[derive(Args, Debug)]
struct ConfigArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    k: usize,
    /// Comma-separated parameters `a:b`.
    #[arg(long)]
    points: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = commands::Options {
        seed: cli.seed,
        trials: cli.trials,
    };
    let outcome = match &cli.command {
        Command::Syzygy { system, d } => commands::syzygy(system, *d, &opts),
        Command::Splitting { system } => commands::splitting(system, &opts),
        Command::Basepoints { system, points } => {
            commands::basepoints(system, points.as_deref(), &opts)
        }
        Command::Poncelet { system, compare } => {
            commands::poncelet(system, compare.as_deref(), &opts)
        }
        Command::Verify(Verify::Dime { k, n, r, d }) => commands::dime(*k, *n, *r, *d, &opts),
        Command::Verify(Verify::Teorema(c)) => commands::teorema(c.n, c.k, &c.points, &opts),
        Command::Verify(Verify::Tpenc(c)) => commands::tpenc(c.n, c.k, &c.points, &opts),
        Command::Verify(Verify::Prozero(c)) => commands::prozero(c.n, c.k, &c.points, &opts),
    };
    match outcome {
        Ok((report, code)) => {
            let text = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
