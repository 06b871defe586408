use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde::Serialize;

use domsub::sat_reduction::parse_dimacs;
use domsub_cli::classify::{classify, ClassifyOptions};
use domsub_cli::reduce::{reduce, reduce_verify, write_dot, ReduceOptions};
use domsub_cli::suite::{verify_suite, SuiteOptions};
use domsub_cli::{exit, read_graph, read_input, CliError, CliResult};

/// Domination number and subdivision numbers of graphs.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact domination number with a minimum dominating set.
    Gamma {
        /// Edge-list file: header `n m`, then one `u v` pair per line.
        input: PathBuf,
    },
    /// Domination subdivision number and multisubdivision number.
    Classify {
        input: PathBuf,
        /// Largest edge set tried by the subset search (default min(m, 5)).
        #[arg(long)]
        budget: Option<usize>,
        /// Use the tree characterization; the input must be a tree.
        #[arg(long)]
        tree: bool,
        /// Cross-check against independent computations; exit 1 on mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Build the reduction graph of a 3-CNF formula given in DIMACS format.
    Reduce {
        input: PathBuf,
        /// Check that the formula is satisfiable exactly when sd(G) > 1.
        #[arg(long)]
        verify: bool,
        /// Also write the graph as Graphviz DOT to this file.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = ReduceOptions::default().max_vars)]
        max_vars: usize,
        #[arg(long, default_value_t = ReduceOptions::default().max_clauses)]
        max_clauses: usize,
        /// Wall-clock limit for --verify, in seconds.
        #[arg(long, default_value_t = ReduceOptions::default().time_budget.as_secs())]
        time_budget: u64,
    },
    /// Rerun the structural checks on exhaustive and random corpora.
    VerifySuite {
        /// Largest order of the exhaustive connected-graph sweep (at most 7).
        #[arg(long, default_value_t = SuiteOptions::default().max_n)]
        max_n: usize,
        /// Size of each random corpus.
        #[arg(long, default_value_t = SuiteOptions::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn emit<T: Serialize>(report: &T) -> CliResult<()> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::new(exit::VIOLATION, format!("serialization failed: {e}")))?;
    println!("{json}");
    Ok(())
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Gamma { input } => {
            let g = read_graph(&input)?;
            emit(&domsub_cli::gamma(&g))?;
            Ok(exit::OK)
        }
        Command::Classify {
            input,
            budget,
            tree,
            verify,
        } => {
            let g = read_graph(&input)?;
            let report = classify(&g, ClassifyOptions { budget, tree, verify })?;
            emit(&report)?;
            for m in &report.mismatches {
                eprintln!("mismatch: {m}");
            }
            Ok(if report.verified == Some(false) { exit::VIOLATION } else { exit::OK })
        }
        Command::Reduce {
            input,
            verify,
            dot,
            max_vars,
            max_clauses,
            time_budget,
        } => {
            let text = read_input(&input)?;
            let f = parse_dimacs(&text)
                .map_err(|e| CliError::new(exit::INPUT, format!("{}: {e}", input.display())))?;
            if let Some(path) = &dot {
                write_dot(path, &f)?;
            }
            if verify {
                let opts = ReduceOptions {
                    max_vars,
                    max_clauses,
                    time_budget: Duration::from_secs(time_budget),
                };
                let report = reduce_verify(&f, &opts)?;
                emit(&report)?;
                if !report.pass {
                    eprintln!("verification failed");
                    return Ok(exit::VIOLATION);
                }
            } else {
                emit(&reduce(&f)?)?;
            }
            Ok(exit::OK)
        }
        Command::VerifySuite {
            max_n,
            samples,
            seed,
            inject_fault,
        } => {
            let report = verify_suite(SuiteOptions {
                max_n,
                samples,
                seed,
                inject_fault,
            })?;
            emit(&report)?;
            for s in &report.suites {
                eprintln!("{} {} ({} cases)", if s.pass { "PASS" } else { "FAIL" }, s.name, s.cases);
            }
            if let Some(c) = &report.counterexample {
                eprintln!("counterexample in {}: {}\n{}", c.suite, c.detail, c.edge_list);
                return Ok(exit::VIOLATION);
            }
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
