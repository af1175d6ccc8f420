use std::io::Read;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use elltrace::document::run_trace;
use elltrace::selftest::{run_selftest, SelftestOptions};

#[derive(Parser)]
#[command(version, about = "Traces of algebraic points on elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the trace of the point in a JSON problem document.
    Trace {
        /// Problem file, or `-` for stdin.
        file: PathBuf,
        /// Print every intermediate value.
        #[arg(long)]
        witness: bool,
    },
    /// Compare the trace with Frobenius-orbit summation on random problems.
    Selftest {
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7,101")]
        chars: Vec<u64>,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "2..12", value_parser = parse_range)]
        degrees: RangeInclusive<usize>,
        /// Instances per characteristic.
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a == 0 || a > b {
        return Err(format!("invalid degree range {a}..{b}"));
    }
    Ok(a..=b)
}

fn read_input(file: &PathBuf) -> std::io::Result<String> {
    if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Trace { file, witness } => {
            let text = match read_input(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    return ExitCode::FAILURE;
                }
            };
            match run_trace(&text, witness) {
                Ok(out) => {
                    print!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Selftest {
            chars,
            degrees,
            count,
            seed,
        } => {
            let opts = SelftestOptions {
                chars,
                degrees,
                count,
                seed,
            };
            match run_selftest(&opts) {
                Ok(report) => {
                    println!("{report}");
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            }
        }
    }
}
