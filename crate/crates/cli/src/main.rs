mod cache;
mod commands;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use snrep::{Level, Limits};

use cache::Cache;
use commands::{Context, Format, Outcome};
use error::{CliError, EXIT_USAGE};

/// Exact irreducible representations of the symmetric group.
#[derive(Debug, Parser)]
#[command(name = "snrep", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Directory for cached JSON results. Caching is off when unset.
    #[arg(long, env = "SNREP_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    /// Lift the size limits on expensive computations.
    #[arg(long, global = true)]
    force: bool,

    /// Seed for sampled verification.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List standard tableaux of a shape, or all dimensions of S_n.
    Tableaux { n: usize, partition: Option<String> },
    /// Print g' and its inverse for a shape.
    Gmatrix { n: usize, partition: String },
    /// Representation matrices x'(b); all permutations when none is given.
    Rep {
        n: usize,
        partition: String,
        permutation: Option<String>,
        /// Print the homomorphic matrices x'(b) g' instead.
        #[arg(long)]
        conventional: bool,
    },
    /// Integer character table of S_n.
    Chartable { n: usize },
    /// Run every verification suite for S_n.
    Verify {
        n: usize,
        #[arg(value_parser = parse_level, default_value = "full")]
        level: Level,
    },
    /// Survey g' over all shapes up to n and evaluate the structural claims.
    Claims {
        #[arg(default_value_t = 7)]
        max_n: usize,
    },
}

fn parse_level(s: &str) -> Result<Level, String> {
    s.parse()
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let ctx = Context {
        format: cli.format,
        limits: if cli.force { Limits::unbounded() } else { Limits::default() },
        seed: cli.seed,
        cache: Cache::new(cli.cache_dir),
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build()?;
    pool.install(|| match &cli.command {
        Command::Tableaux { n, partition } => commands::tableaux(&ctx, *n, partition.as_deref()),
        Command::Gmatrix { n, partition } => commands::gmatrix(&ctx, *n, partition),
        Command::Rep { n, partition, permutation, conventional } => {
            commands::rep(&ctx, *n, partition, permutation.as_deref(), *conventional)
        }
        Command::Chartable { n } => commands::chartable(&ctx, *n),
        Command::Verify { n, level } => commands::verify_cmd(&ctx, *n, *level),
        Command::Claims { max_n } => commands::claims(&ctx, *max_n),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            let _ = std::io::stdout().flush();
            eprint!("{}", outcome.stderr);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("snrep: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
