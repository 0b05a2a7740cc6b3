use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Outcome};

/// Social rankings of individuals from ranked coalitions.
#[derive(Parser, Debug)]
#[command(name = "coalrank", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print each individual's score under a score-based solution.
    Scores {
        file: PathBuf,
        #[arg(long, short)]
        solution: String,
    },
    /// Print the induced ranking of individuals.
    Rank {
        file: PathBuf,
        #[arg(long, short)]
        solution: String,
    },
    /// Compare two individuals under one solution or all of them.
    Compare {
        file: PathBuf,
        x: String,
        y: String,
        #[arg(long, short, conflicts_with = "all", required_unless_present = "all")]
        solution: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Banzhaf values of the Borda-type game and agreement with its score.
    Banzhaf {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        t: u8,
    },
    /// Compare inversion scores against the brute-force swap distance.
    OracleVerify { file: PathBuf },
    /// Check a solution against an axiom on generated instances.
    Fuzz {
        solution: String,
        axiom: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        iters: u64,
        #[arg(long, conflicts_with = "expect_fail")]
        expect_pass: bool,
        #[arg(long)]
        expect_fail: bool,
        /// Write the minimized witness of the first failure here.
        #[arg(long)]
        witness_out: Option<PathBuf>,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        max_individuals: Option<usize>,
        #[arg(long)]
        max_classes: Option<usize>,
        #[arg(long)]
        max_class_size: Option<usize>,
        #[arg(long)]
        max_multiplicity: Option<u64>,
        #[arg(long)]
        allow_empty_coalition: bool,
    },
    /// Re-check a witness file.
    Replay { witness: PathBuf },
    /// Run the fixture suite.
    Suite {
        #[arg(long, value_enum, default_value_t = SuiteFormat::Text)]
        format: SuiteFormat,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteFormat {
    Text,
    Records,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Scores { file, solution } => commands::scores(&file, &solution),
        Command::Rank { file, solution } => commands::rank(&file, &solution),
        Command::Compare {
            file,
            x,
            y,
            solution,
            all: _,
        } => commands::compare(&file, &x, &y, solution.as_deref()),
        Command::Banzhaf { file, t } => commands::banzhaf(&file, t),
        Command::OracleVerify { file } => commands::oracle_verify(&file),
        Command::Fuzz {
            solution,
            axiom,
            seed,
            iters,
            expect_pass,
            expect_fail,
            witness_out,
            sequential,
            max_individuals,
            max_classes,
            max_class_size,
            max_multiplicity,
            allow_empty_coalition,
        } => {
            let mut params = coalrank::GenParams::with_seed(seed);
            if let Some(v) = max_individuals {
                params.max_individuals = v;
            }
            if let Some(v) = max_classes {
                params.max_classes = v;
            }
            if let Some(v) = max_class_size {
                params.max_class_size = v;
            }
            if let Some(v) = max_multiplicity {
                params.max_multiplicity = v;
            }
            params.allow_empty_coalition = allow_empty_coalition;
            let expect = match (expect_pass, expect_fail) {
                (true, _) => Some(true),
                (_, true) => Some(false),
                _ => None,
            };
            commands::fuzz(commands::FuzzArgs {
                solution: &solution,
                axiom: &axiom,
                params,
                iterations: iters,
                expect_pass: expect,
                witness_out: witness_out.as_deref(),
                sequential,
            })
        }
        Command::Replay { witness } => commands::replay(&witness),
        Command::Suite { format } => Ok(commands::suite(format == SuiteFormat::Records)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("coalrank: {e}");
            ExitCode::from(e.code())
        }
    }
}
