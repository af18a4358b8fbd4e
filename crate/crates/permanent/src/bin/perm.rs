//! Thin command-line front end over the library.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use permanent::cli::{
    self, cmd_bench, cmd_compute, cmd_verify, parse_range, AlgebraSel, AlgoSel,
};
use permanent::perm::{Algorithm, Variant};

#[derive(Parser)]
#[command(
    name = "perm",
    about = "Exact permanents of rectangular matrices over pluggable algebras",
    long_about = "Computes matrix permanents exactly over int64, bigint, mod:<p>, tropical, \
                  mat2 and mat2z carriers; verifies the fast algorithms against brute-force \
                  oracles; benchmarks measured operation counts against predicted bounds."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one permanent from a matrix file (or stdin with `-`).
    Compute {
        #[arg(long, help = "Algebra selector: int64|bigint|mod:<p>|tropical|mat2|mat2z")]
        algebra: String,
        /// Algorithm: auto|brute|dp-col|dp-row|ryser|ryser-split|ryser-t.
        #[arg(long, default_value = "auto")]
        algo: String,
        /// Which flavor to compute: per|per-t.
        #[arg(long, default_value = "per")]
        variant: String,
        /// Also print measured operation counts and the predicted bound.
        #[arg(long)]
        count_ops: bool,
        /// Path to the matrix file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Cross-check every applicable algorithm against the brute-force
    /// oracles on seeded random matrices.
    Verify {
        #[arg(long)]
        algebra: String,
        /// Largest row count (must not exceed max-n).
        #[arg(long)]
        max_m: usize,
        /// Largest column count (at most 9, so the oracle stays feasible).
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Emit CSV rows of measured operation counts vs predicted bounds.
    Bench {
        /// Comma-separated algebra selectors.
        #[arg(long, default_value = "bigint")]
        algebras: String,
        /// Comma-separated algorithms (no `auto` here).
        #[arg(long, default_value = "dp-col,dp-row,ryser,ryser-split,ryser-t")]
        algos: String,
        /// Inclusive row range `a..b`.
        #[arg(long, default_value = "2..6")]
        m: String,
        /// Inclusive column range `a..b`.
        #[arg(long, default_value = "2..10")]
        n: String,
        /// Accepted for symmetry; CSV is the only bench output format.
        #[arg(long, default_value_t = true)]
        csv: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn fail(message: String, code: i32) -> ExitCode {
    eprintln!("perm: {message}");
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { algebra, algo, variant, count_ops, input } => {
            let algebra: AlgebraSel = match algebra.parse() {
                Ok(a) => a,
                Err(e) => return fail(e, cli::EXIT_PARSE),
            };
            let algo: AlgoSel = match algo.parse() {
                Ok(a) => a,
                Err(e) => return fail(e, cli::EXIT_PARSE),
            };
            let variant: Variant = match variant.parse() {
                Ok(v) => v,
                Err(e) => return fail(e, cli::EXIT_PARSE),
            };
            let text = if input == "-" {
                let mut buf = String::new();
                if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                    return fail(format!("reading stdin: {e}"), cli::EXIT_PARSE);
                }
                buf
            } else {
                match std::fs::read_to_string(&input) {
                    Ok(t) => t,
                    Err(e) => return fail(format!("reading {input}: {e}"), cli::EXIT_PARSE),
                }
            };
            cmd_compute(algebra, algo, variant, count_ops, &text)
        }
        Command::Verify { algebra, max_m, max_n, trials, seed } => {
            let algebra: AlgebraSel = match algebra.parse() {
                Ok(a) => a,
                Err(e) => return fail(e, cli::EXIT_PARSE),
            };
            cmd_verify(algebra, max_m, max_n, trials, seed)
        }
        Command::Bench { algebras, algos, m, n, csv: _, seed } => {
            let algebras: Result<Vec<AlgebraSel>, String> =
                algebras.split(',').map(|s| s.trim().parse()).collect();
            let algos: Result<Vec<Algorithm>, String> =
                algos.split(',').map(|s| s.trim().parse()).collect();
            match (algebras, algos, parse_range(&m), parse_range(&n)) {
                (Ok(algebras), Ok(algos), Ok(mr), Ok(nr)) => {
                    cmd_bench(&algebras, &algos, mr, nr, seed)
                }
                (Err(e), ..) | (_, Err(e), ..) => return fail(e, cli::EXIT_PARSE),
                (.., Err(e), _) | (.., Err(e)) => return fail(e, cli::EXIT_PARSE),
            }
        }
    };
    match result {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e.message, e.code),
    }
}
