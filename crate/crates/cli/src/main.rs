use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use strongpow::graph::strong_power_graph;
use strongpow::groupspec::GroupSpec;
use strongpow::spectral::{adjacency, laplacian};
use strongpow::verify::{
    invariant_bundle, parse_checks, parse_range, run_verify, sweep, Check, Family,
    KnownDiscrepancies, SweepColumn,
};
use strongpow::Error;

/// Largest group order for which a graph is materialized.
const MAX_GRAPH_ORDER: usize = 16384;

#[derive(Parser)]
#[command(
    name = "strongpow",
    version,
    about = "Strong power graphs of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the strong power graph of a group.
    Build {
        /// zn:<n> | klein | dihedral:<k> | sym:<k> | product:<a>+<b> | table:<path>
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = BuildFormat::Json)]
        format: BuildFormat,
        /// Matrix written by `--format mtx`.
        #[arg(long, value_enum, default_value_t = MatrixKind::Laplacian)]
        matrix: MatrixKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print every invariant of one strong power graph.
    Invariants {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
    /// Compare closed forms with oracles over a family of groups.
    Verify {
        #[arg(long, default_value = "cyclic")]
        family: String,
        /// Inclusive order range, `a..b` or `n`.
        #[arg(long)]
        range: String,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Tsv)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV of closed-form invariants of Z_n over a range of n.
    Sweep {
        #[arg(long)]
        range: String,
        /// Comma-separated column names; defaults to all columns.
        #[arg(long)]
        columns: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildFormat {
    Json,
    Dot,
    Mtx,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Laplacian,
    Adjacency,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Tsv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io {
            context: format!("writing {}", path.display()),
            message: e.to_string(),
        }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io {
                context: "writing stdout".to_string(),
                message: e.to_string(),
            }),
    }
}

fn load_group(text: &str) -> Result<(GroupSpec, strongpow::group::FiniteGroup), Error> {
    let spec = GroupSpec::parse(text)?;
    if let Some(n) = spec.order_hint().filter(|&n| n > MAX_GRAPH_ORDER) {
        return Err(Error::TooLarge {
            operation: "graph construction",
            size: n,
            limit: MAX_GRAPH_ORDER,
        });
    }
    let group = spec.build()?;
    Ok((spec, group))
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Build {
            group,
            format,
            matrix,
            out,
        } => {
            let (spec, g) = load_group(&group)?;
            let graph = strong_power_graph(&g);
            let text = match format {
                BuildFormat::Json => graph.to_json() + "\n",
                BuildFormat::Dot => graph.to_dot(&spec.to_string()),
                BuildFormat::Mtx => match matrix {
                    MatrixKind::Laplacian => laplacian(&graph).to_matrix_market(),
                    MatrixKind::Adjacency => adjacency(&graph).to_matrix_market(),
                },
            };
            emit(out.as_ref(), &text)?;
            Ok(0)
        }
        Command::Invariants { group, format } => {
            let (spec, g) = load_group(&group)?;
            let bundle = invariant_bundle(&spec.to_string(), &g)?;
            let text = match format {
                TableFormat::Table => bundle.to_table(),
                TableFormat::Json => bundle.to_json(),
            };
            emit(None, &text)?;
            Ok(0)
        }
        Command::Verify {
            family,
            range,
            checks,
            format,
            out,
        } => {
            let family: Family = family.parse()?;
            let range = parse_range(&range)?;
            if *range.end() > MAX_GRAPH_ORDER {
                return Err(Error::TooLarge {
                    operation: "verify range",
                    size: *range.end(),
                    limit: MAX_GRAPH_ORDER,
                });
            }
            let checks: Vec<Check> = parse_checks(&checks)?;
            let report = run_verify(family, range, &checks, &KnownDiscrepancies::builtin())?;
            let text = match format {
                ReportFormat::Tsv => report.to_tsv(),
                ReportFormat::Json => report.to_json(),
            };
            emit(out.as_ref(), &text)?;
            let s = report.summary();
            eprintln!(
                "{} agree, {} known disagreements, {} undocumented disagreements, {} skipped",
                s.agree, s.disagree_known, s.disagree_undocumented, s.skipped
            );
            Ok(report.exit_code() as u8)
        }
        Command::Sweep {
            range,
            columns,
            out,
        } => {
            let range = parse_range(&range)?;
            let columns = match columns {
                Some(c) => SweepColumn::parse_list(&c)?,
                None => SweepColumn::ALL.to_vec(),
            };
            emit(out.as_ref(), &sweep(range, &columns)?)?;
            Ok(0)
        }
    }
}
