use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use helmlab::report::{self, EigMatrix, VerificationReport, SPECTRUM_TOLERANCE};

#[derive(Parser)]
#[command(
    name = "helmlab",
    version,
    about = "Exact verification of helm-graph distance matrix inverses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite for one n.
    Verify {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the suite for every n in [min, max].
    Sweep {
        #[arg(long, default_value_t = 4)]
        min: i64,
        #[arg(long, default_value_t = 13)]
        max: i64,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the circulant spectrum of S, B or A next to its analytic values.
    Eig {
        #[arg(long, value_enum, ignore_case = true)]
        matrix: EigMatrix,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn valid_n(n: i64) -> Option<usize> {
    (n >= 4).then_some(n as usize)
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn status(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(VerificationReport::all_pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { n, format } => {
            let Some(n) = valid_n(n) else {
                return usage(format!("n must be at least 4, got {n}"));
            };
            let report = match report::verify(n) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print_json(&report),
            }
            status(std::slice::from_ref(&report))
        }
        Command::Sweep {
            min,
            max,
            parallel,
            format,
        } => {
            let (Some(lo), Some(hi)) = (valid_n(min), valid_n(max)) else {
                return usage(format!("range bounds must be at least 4, got {min}..{max}"));
            };
            if lo > hi {
                return usage(format!("empty range {min}..{max}"));
            }
            let reports = match report::sweep(lo, hi, parallel) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            match format {
                Format::Text => {
                    for r in reports.iter().filter(|r| !r.all_pass()) {
                        print!("{}", r.to_text());
                    }
                    print!("{}", report::sweep_table(&reports));
                }
                Format::Json => print_json(&reports),
            }
            status(&reports)
        }
        Command::Eig { matrix, n, format } => {
            let Some(n) = valid_n(n) else {
                return usage(format!("n must be at least 4, got {n}"));
            };
            let table = match report::eig_table(matrix, n) {
                Ok(t) => t,
                Err(e) => return usage(e),
            };
            match format {
                Format::Text => print!("{}", table.to_text()),
                Format::Json => print_json(&table),
            }
            match table.max_deviation {
                Some(d) if d < SPECTRUM_TOLERANCE => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_FAIL),
            }
        }
    }
}
