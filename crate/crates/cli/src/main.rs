//! `skyscraper` — exact permutation-visibility counts, verification
//! suites, and a puzzle solver on one command line.
//!
//! Exit codes: 0 success/verified, 1 usage or input error, 2 verification
//! failure, unsatisfiable puzzle, or failed check.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use skyscraper_core::oracle::enumerate_rows;
use skyscraper_core::puzzle::{count_solutions, solve, verify_solution, Grid, Puzzle, SolveStatus};
use skyscraper_core::skyscraper::{max_pairs, sequence, skyscraper_number, skyscraper_table};
use skyscraper_core::stirling_row;
use skyscraper_core::verify::{run_all, VerifyOptions};

mod output;
mod reference;

#[derive(Parser)]
#[command(
    name = "skyscraper",
    version,
    about = "Exact counts of permutations by visible buildings, plus a puzzle solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n x n table of counts f_n(a, b)
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print row n of the Stirling triangle: c(n, 0) .. c(n, n)
    Stirling {
        #[arg(long)]
        n: usize,
    },
    /// Print f_n(left, right), the number of rows matching a clue pair
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
    },
    /// Report the least restrictive clue pair(s) for grid size n
    Maxpair {
        #[arg(long)]
        n: usize,
    },
    /// Print the sequence of maximal counts for n = 1..=max-n
    Sequence {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// List permutations of 1..=n matching the given clues, in order
    EnumerateRow {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        left: Option<usize>,
        #[arg(long)]
        right: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Run the identity and oracle-equivalence suites
    Verify {
        /// Depth of the exhaustive-enumeration suites
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: usize,
    },
    /// Compare computed values against the stored reference data
    Selfcheck,
    /// Solve a puzzle file (text or JSON format)
    Solve {
        file: PathBuf,
        /// Print the exact number of solutions instead of the grids
        #[arg(long)]
        count_all: bool,
        /// Stop after this many solutions (default 2)
        #[arg(long)]
        max_solutions: Option<usize>,
    },
    /// Check a solution file against a puzzle file
    Check {
        file: PathBuf,
        solution_file: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = err.print();
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn require_positive(n: usize) -> Result<(), String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_puzzle(path: &Path) -> Result<Puzzle, String> {
    let text = read_file(path)?;
    Puzzle::from_str_any(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Table { n, format } => {
            require_positive(n)?;
            if n > 200 {
                eprintln!(
                    "warning: building the full {n} x {n} table of big integers; this may take a while"
                );
            }
            let table = skyscraper_table(n);
            let rendered = match format {
                Format::Text => output::table_text(&table),
                Format::Csv => output::table_csv(&table),
                Format::Json => output::table_json(&table),
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Stirling { n } => {
            let row: Vec<String> = stirling_row(n).iter().map(|v| v.to_string()).collect();
            println!("{}", row.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { n, left, right } => {
            require_positive(n)?;
            println!("{}", skyscraper_number(n, left, right));
            Ok(ExitCode::SUCCESS)
        }
        Command::Maxpair { n } => {
            require_positive(n)?;
            let report = max_pairs(n);
            let pairs: Vec<String> = report
                .pairs
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect();
            println!(
                "n={} max={} canonical=({},{}) pairs={}",
                report.n,
                report.max_value,
                report.canonical_pair.0,
                report.canonical_pair.1,
                pairs.join(",")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Sequence { max_n } => {
            require_positive(max_n)?;
            for term in sequence(max_n) {
                println!(
                    "{} {} ({},{})",
                    term.n, term.max_value, term.canonical_pair.0, term.canonical_pair.1
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::EnumerateRow {
            n,
            left,
            right,
            limit,
        } => {
            require_positive(n)?;
            let rows = enumerate_rows(n, left, right, limit).map_err(|e| e.to_string())?;
            for row in rows {
                let line: Vec<String> = row.heights().iter().map(|h| h.to_string()).collect();
                println!("{}", line.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n_max } => {
            require_positive(n_max)?;
            let outcomes = run_all(&VerifyOptions { oracle_max_n: n_max });
            let mut failures = 0;
            for outcome in &outcomes {
                let tag = if outcome.passed { "ok  " } else { "FAIL" };
                println!("{tag} {:<32} {}", outcome.name, outcome.detail);
                if !outcome.passed {
                    failures += 1;
                }
            }
            if failures > 0 {
                println!("{failures} of {} suites failed", outcomes.len());
                return Ok(ExitCode::from(2));
            }
            println!("all {} suites passed", outcomes.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Selfcheck => {
            let mut failures = 0;
            for (item, comparison) in reference::run_selfcheck() {
                match comparison {
                    reference::Comparison::Match => println!("MATCH         {item}"),
                    reference::Comparison::Erratum {
                        printed,
                        computed,
                        note,
                    } => println!(
                        "PAPER-ERRATUM {item}: printed {printed}, computed {computed} ({note})"
                    ),
                    reference::Comparison::Fail { printed, computed } => {
                        failures += 1;
                        println!("FAIL          {item}: printed {printed}, computed {computed}");
                    }
                }
            }
            if failures > 0 {
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            file,
            count_all,
            max_solutions,
        } => {
            let puzzle = load_puzzle(&file)?;
            if count_all {
                let count = count_solutions(&puzzle).map_err(|e| e.to_string())?;
                println!("{count}");
                return Ok(if count == 0u8.into() {
                    ExitCode::from(2)
                } else {
                    ExitCode::SUCCESS
                });
            }
            let result = solve(&puzzle, max_solutions).map_err(|e| e.to_string())?;
            for (i, grid) in result.solutions.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!("{grid}");
            }
            match result.status {
                SolveStatus::Unique => {
                    eprintln!("unique solution ({} nodes)", result.nodes_expanded);
                    Ok(ExitCode::SUCCESS)
                }
                SolveStatus::Multiple => {
                    eprintln!(
                        "multiple solutions (showing {}, {} nodes)",
                        result.solutions.len(),
                        result.nodes_expanded
                    );
                    Ok(ExitCode::SUCCESS)
                }
                SolveStatus::Truncated => {
                    eprintln!(
                        "stopped after {} solution(s) ({} nodes)",
                        result.solutions.len(),
                        result.nodes_expanded
                    );
                    Ok(ExitCode::SUCCESS)
                }
                SolveStatus::Unsatisfiable => {
                    eprintln!("unsatisfiable ({} nodes)", result.nodes_expanded);
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Check {
            file,
            solution_file,
        } => {
            let puzzle = load_puzzle(&file)?;
            let text = read_file(&solution_file)?;
            let grid =
                Grid::parse(&text).map_err(|e| format!("{}: {e}", solution_file.display()))?;
            let report = verify_solution(&puzzle, &grid);
            println!("{report}");
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
    }
}
