//! `buchi`: search for Büchi tuples, generate and convert them, and audit the
//! symbolic identities behind the quadruple and quintuple arguments.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 usage error, 3 a chain of
//! length five or more was found.

mod commands;
mod output;

use std::fs;
use std::process::ExitCode;

use buchi_core::proofkit::{AssignmentFilter, Corruption};
use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, ConvertInput, VerifyArgs, EXIT_USAGE};
use output::Format;

#[derive(Parser)]
#[command(
    name = "buchi",
    version,
    about = "Squares in monic quadratic progression"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Chains of n Büchi pairs with D ≤ dmax.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u64,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
    /// Closed-form families.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Between tuple, pair and parametrizing-sequence forms.
    Convert(ConvertArgs),
    /// Symbolic identity audits.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Constraints such as `b1=1,b2=2`.
        #[arg(long, default_value = "")]
        assignments: String,
        /// Add a variable to one entry: `M:row:col` or `calM:row:col`.
        #[arg(long)]
        corrupt: Option<String>,
        /// Random points for the numeric cross-check.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Hensley's cubic quadruples for t in an inclusive range `a..b`.
    Hensley {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Triples from seeds `s1 s3 s4 s6 beta`.
    Triple {
        #[arg(long, conflicts_with = "seed_file")]
        seed: Vec<String>,
        #[arg(long)]
        seed_file: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConvertArgs {
    /// Square roots `u1 u2 ...`.
    #[arg(long)]
    tuple: Option<String>,
    /// Pairs `x1,y1 x2,y2 ...`.
    #[arg(long)]
    pairs: Option<String>,
    /// A parametrizing sequence of length 2^n.
    #[arg(long)]
    seq: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Quad,
    Quintuple,
    All,
}

fn run(cli: Cli) -> commands::Outcome {
    match cli.command {
        Command::Search { n, dmax, shards } => commands::search(n, dmax, shards),
        Command::Generate {
            family: Family::Hensley { t },
        } => commands::generate_hensley(commands::parse_range(&t)?),
        Command::Generate {
            family: Family::Triple { seed, seed_file },
        } => {
            let seeds = match seed_file {
                Some(path) => commands::read_seed_file(&path)?,
                None => seed,
            };
            if seeds.is_empty() {
                return Err(CliError("give --seed or --seed-file".into()));
            }
            commands::generate_triples(&seeds)
        }
        Command::Convert(ConvertArgs { tuple, pairs, seq }) => {
            let input = match (tuple, pairs, seq) {
                (Some(t), _, _) => ConvertInput::Tuple(t),
                (_, Some(p), _) => ConvertInput::Pairs(p),
                (_, _, Some(s)) => ConvertInput::Seq(s),
                _ => unreachable!("clap requires one input"),
            };
            commands::convert(input)
        }
        Command::Verify {
            suite,
            assignments,
            corrupt,
            samples,
            seed,
        } => {
            let filter: AssignmentFilter = assignments.parse()?;
            let corruption = corrupt.map(|c| c.parse::<Corruption>()).transpose()?;
            let (quad, quintuple) = match suite {
                Suite::Quad => (true, false),
                Suite::Quintuple => (false, true),
                Suite::All => (true, true),
            };
            commands::verify(VerifyArgs {
                quad,
                quintuple,
                filter,
                corruption,
                samples,
                seed,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let (format, out) = (cli.format, cli.out.clone());
    let (report, code) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let text = match report.render(format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: {path}: {e}");
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code as u8)
}
