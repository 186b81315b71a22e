// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use abelsq_cli::{
    cmd_count, cmd_express, cmd_grid, cmd_selftest, cmd_simulate, parse_n_list, table1, CliError,
    DSpec, Format, Method, OutputRecordSet,
};
use abelsq_core::{McOptions, DEFAULT_ENUMERATION_GUARD};
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "abelsq",
    version,
    about = "Exact abelian-square counts and circuit expressiveness"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output path; `-` or omitted writes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of abelian squares of length t+t over d symbols.
    Count {
        /// Alphabet size: decimal integer or 2^k.
        #[arg(long)]
        d: String,
        /// Half length of the square.
        #[arg(long)]
        t: usize,
        /// fast: recursion; oracle: signature sum; words: enumeration; all: every method.
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Step limit for the enumerating methods.
        #[arg(long, env = "ABELSQ_GUARD", default_value_t = DEFAULT_ENUMERATION_GUARD)]
        guard: u64,
    },
    /// Exact fidelity moment, its minimum, and the normalized expressiveness.
    Express {
        /// Number of qubits.
        #[arg(long)]
        n: u32,
        /// Fidelity power.
        #[arg(long)]
        t: u32,
    },
    /// Normalized expressiveness over a grid of qubit counts and powers.
    Grid {
        /// Qubit counts: `1..8`, `1,2,5`, or a single value.
        #[arg(long, default_value = "1..8", allow_hyphen_values = true)]
        n: String,
        /// Largest fidelity power; rows cover t = 1..=t-max.
        #[arg(long, default_value_t = 32)]
        t_max: u32,
    },
    /// Monte Carlo estimate of the fidelity moment against the exact value.
    Simulate {
        /// Number of qubits.
        #[arg(long)]
        n: u32,
        /// Fidelity power.
        #[arg(long)]
        t: u32,
        /// Number of sampled circuit pairs.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// RNG seed; equal seeds give identical output.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; results do not depend on this.
        #[arg(long)]
        threads: Option<usize>,
        /// Sample phase differences directly instead of phase pairs.
        #[arg(long)]
        sample_difference: bool,
    },
    /// Recompute the reference table of f_d(t) for d <= 6, t <= 7.
    Selftest {
        /// Alternate fixture CSV with header d,t,expected.
        #[arg(long, hide = true)]
        fixture: Option<PathBuf>,
    },
}

fn command_line() -> String {
    std::env::args()
        .map(|a| {
            if a.is_empty() || a.contains(char::is_whitespace) {
                format!("'{a}'")
            } else {
                a
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })
        }
        _ => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let command = command_line();
    let out = cli.out.as_ref();
    let set: OutputRecordSet = match cli.command {
        Command::Count {
            d,
            t,
            method,
            guard,
        } => {
            let d: DSpec = d.parse()?;
            cmd_count(&d, t, method, guard, &command)?
        }
        Command::Express { n, t } => cmd_express(n, t, &command)?,
        Command::Grid { n, t_max } => {
            let n_values = parse_n_list(&n)?;
            if n_values.is_empty() {
                eprintln!("warning: empty qubit list, grid has no rows");
            }
            let set = cmd_grid(&n_values, t_max, &command)?;
            if let Some(path) = out.filter(|p| p.as_os_str() != "-") {
                eprintln!("wrote {} grid rows to {}", set.rows.len(), path.display());
            }
            set
        }
        Command::Simulate {
            n,
            t,
            samples,
            seed,
            threads,
            sample_difference,
        } => {
            let options = McOptions { sample_difference };
            let go = || cmd_simulate(n, t, samples, seed, options, &command);
            match threads {
                Some(threads) => rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .map_err(|e| CliError::Usage(format!("cannot start {threads} threads: {e}")))?
                    .install(go)?,
                None => go()?,
            }
        }
        Command::Selftest { fixture } => {
            let cells = match fixture {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    table1::parse_fixture(&text)?
                }
                None => table1::cells(),
            };
            let start = Instant::now();
            let report = cmd_selftest(&cells, &command)?;
            emit(&report.records.render(cli.format), out)?;
            eprintln!(
                "selftest: {}/{} cells pass in {:.3} s",
                report.total - report.failed,
                report.total,
                start.elapsed().as_secs_f64()
            );
            if !report.passed() {
                return Err(CliError::SelfTestFailed {
                    failed: report.failed,
                    total: report.total,
                });
            }
            return Ok(());
        }
    };
    emit(&set.render(cli.format), out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("abelsq: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
