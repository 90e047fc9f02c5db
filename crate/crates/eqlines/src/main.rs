use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eqlines::catalog::{read_catalog, read_terminal_order, write_catalog, write_summary, Catalog};
use eqlines::{enumerate, inspect, verify_catalog, AppError, ExitStatus};
use eqlines_core::{minimal_forbidden, n_alpha_table, summarize, Family, Graph, RankOrderProfile};

#[derive(Parser)]
#[command(name = "eqlines", version, about = "Exact enumeration of Seidel matrices with bounded smallest eigenvalue")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimal forbidden subgraphs, one per switching class.
    MinForb {
        #[arg(long)]
        single_edge: bool,
    },
    /// Run the enumeration and write catalog files plus a summary.
    Enum {
        #[arg(long)]
        single_edge: bool,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print N(d) for d = 2..=dmax.
    Table {
        #[arg(long, default_value_t = 30)]
        dmax: usize,
        /// Read minimum ranks from cherry catalogs instead of enumerating.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Check catalog files against the reference tables.
    Verify {
        #[arg(long)]
        single_edge: bool,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
    /// Print spectral data for one graph given as `<n>:<row1>,...`.
    Inspect { graph: String },
}

fn family(single_edge: bool) -> Family {
    if single_edge {
        Family::Edge
    } else {
        Family::Cherry
    }
}

fn run(cli: Cli) -> Result<ExitStatus, AppError> {
    match cli.command {
        Command::MinForb { single_edge } => {
            let family = family(single_edge);
            for g in minimal_forbidden(family, family.forbidden_order_bound()) {
                println!("{g}");
            }
        }
        Command::Enum { single_edge, out, threads } => {
            let store = enumerate(family(single_edge), threads)?;
            let stats = summarize(&store);
            write_catalog(&out, &Catalog::from_store(&store))?;
            let path = write_summary(&out, &stats)?;
            print!("{}", std::fs::read_to_string(&path).map_err(|e| AppError::io(&path, e))?);
        }
        Command::Table { dmax, dir } => {
            let profile = match dir {
                Some(dir) => {
                    let catalog = read_catalog(&dir, Family::Cherry)?;
                    let min_ranks = catalog.levels.iter().map(|(&n, m)| (n, m.iter().map(|&(_, r)| r).min().unwrap_or(0)));
                    let terminal = read_terminal_order(&dir, Family::Cherry)?;
                    let complete = terminal.is_some_and(|t| catalog.levels.keys().all(|&n| n < t));
                    RankOrderProfile::new(min_ranks, complete)
                }
                None => {
                    let store = enumerate(Family::Cherry, 1)?;
                    let complete = store.terminal_order().is_some();
                    RankOrderProfile::new(summarize(&store).min_ranks(), complete)
                }
            };
            for (d, n) in n_alpha_table(&profile, dmax)? {
                println!("{d} {n}");
            }
        }
        Command::Verify { single_edge, dir } => {
            let report = verify_catalog(&read_catalog(&dir, family(single_edge))?)?;
            print!("{report}");
            if !report.passed() {
                return Ok(ExitStatus::Mismatch);
            }
        }
        Command::Inspect { graph } => {
            let g: Graph = graph.parse()?;
            print!("{}", inspect(&g)?);
        }
    }
    Ok(ExitStatus::Pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { ExitStatus::Input.code() as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_status().code() as u8)
        }
    }
}
