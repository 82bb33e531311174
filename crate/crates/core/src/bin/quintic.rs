use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quintic::cli::{classify_command, oracle_command, selftest_command, CommandOutput, EXIT_PARSE};
use quintic::oracle::OracleConfig;
use quintic::selftest::{SelftestConfig, DEFAULT_COUNT};

#[derive(Parser)]
#[command(name = "quintic", version, about = "Galois groups of rational quintics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the Galois group of an irreducible quintic.
    Classify {
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Classify and cross-check against the floating-point root oracle.
    Oracle {
        #[arg(long)]
        json: bool,
        /// Relative tolerance between exact and numeric resolvent coefficients.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Denominator cap for the rationality test.
        #[arg(long, default_value_t = 1_000_000)]
        max_den: u64,
        /// Relative acceptance window for the rationality test.
        #[arg(long, default_value_t = 1e-9)]
        rat_tol: f64,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Run the seeded random-corpus property suite.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_COUNT)]
        count: usize,
        /// Overrides QUINTIC_SEED.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn emit(out: CommandOutput) -> ExitCode {
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_PARSE as u8) } else { ExitCode::SUCCESS };
        }
    };
    emit(match cli.command {
        Command::Classify { json, poly } => classify_command(&poly, json),
        Command::Oracle { json, tol, max_den, rat_tol, poly } => {
            let config = OracleConfig { tol, max_den, rational_window: rat_tol, ..OracleConfig::default() };
            oracle_command(&poly, json, &config)
        }
        Command::Selftest { count, seed } => {
            selftest_command(&SelftestConfig { count, seed: SelftestConfig::resolve_seed(seed), ..Default::default() })
        }
    })
}
