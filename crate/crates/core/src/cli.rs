//! The `minksum` command line.
//!
//! Exit codes: 0 on success or when every check passes, 1 when a property
//! fails or a non-decomposable witness is printed, 2 on usage or input
//! errors.

use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::edge_polytope::{edge_polytope, theorem34_decompose};
use crate::harness::{all_passed, render_table, verify_paper, RunConfig};
use crate::io::{graph_from_json, polytope_from_json, polytope_to_value};
use crate::polytope::{minkowski_sum, LatticePolytope};
use crate::semigroup::{idp_check, level_check, normal_check, CheckReport};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "minksum", version, about = "Exact lattice polytope and edge polytope computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Affine dimension of a polytope.
    Dim { polytope: PathBuf },
    /// Minkowski sum of two or more polytopes, as polytope JSON.
    Minksum {
        #[arg(required = true, num_args = 2..)]
        polytopes: Vec<PathBuf>,
    },
    /// Lattice points of the k-th dilate.
    Points {
        polytope: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
    /// Integer decomposition property up to a degree bound.
    Idp {
        polytope: PathBuf,
        #[arg(long = "max-k", default_value_t = 3)]
        max_k: usize,
    },
    /// Normality up to a degree bound.
    Normal {
        polytope: PathBuf,
        #[arg(long = "max-k", default_value_t = 3)]
        max_k: usize,
    },
    /// Interior split property of n_1 P_1 + ... + n_m P_m.
    Level {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<i64>,
        #[arg(required = true)]
        polytopes: Vec<PathBuf>,
        #[arg(long = "max-k", default_value_t = 3)]
        max_k: usize,
    },
    /// Edge polytope of a graph, as polytope JSON.
    EdgePolytope { graph: PathBuf },
    /// Odd cycle condition of a connected graph.
    Occ { graph: PathBuf },
    /// Whether every two odd cycles of a connected graph share a vertex.
    CommonVertex { graph: PathBuf },
    /// Split a point of k(P_G1 + P_G2) into k lattice points.
    Decompose {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        alpha: Vec<i64>,
        #[arg(long)]
        k: usize,
    },
    /// Run the full reproduction suite.
    VerifyPaper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-k", default_value_t = 3)]
        max_k: usize,
        #[arg(long = "samples", default_value_t = 20)]
        sample_count: usize,
        #[arg(long = "dim-cap", default_value_t = 8)]
        dim_cap: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_polytope(path: &Path) -> Result<LatticePolytope> {
    polytope_from_json(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<crate::graph::Graph> {
    graph_from_json(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Input(format!("write failed: {e}")))
}

fn report_code(out: &mut dyn Write, report: &CheckReport) -> Result<i32> {
    emit(out, serde_json::to_string(report).expect("serializable"))?;
    Ok(if report.holds_up_to_k() { EXIT_OK } else { EXIT_FAIL })
}

fn predicate_code(out: &mut dyn Write, value: bool) -> Result<i32> {
    emit(out, value)?;
    Ok(if value { EXIT_OK } else { EXIT_FAIL })
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Dim { polytope } => {
            emit(out, load_polytope(&polytope)?.dimension())?;
            Ok(EXIT_OK)
        }
        Command::Minksum { polytopes } => {
            let ps = polytopes.iter().map(|p| load_polytope(p)).collect::<Result<Vec<_>>>()?;
            emit(out, polytope_to_value(&minkowski_sum(&ps)?.reduced()))?;
            Ok(EXIT_OK)
        }
        Command::Points { polytope, k } => {
            let points = load_polytope(&polytope)?.dilate(k)?.lattice_points();
            emit(out, json!(points))?;
            Ok(EXIT_OK)
        }
        Command::Idp { polytope, max_k } => report_code(out, &idp_check(&load_polytope(&polytope)?, max_k)?),
        Command::Normal { polytope, max_k } => {
            report_code(out, &normal_check(&load_polytope(&polytope)?, max_k)?)
        }
        Command::Level { n, polytopes, max_k } => {
            let ps = polytopes.iter().map(|p| load_polytope(p)).collect::<Result<Vec<_>>>()?;
            report_code(out, &level_check(&ps, &n, max_k)?)
        }
        Command::EdgePolytope { graph } => {
            emit(out, polytope_to_value(&edge_polytope(&load_graph(&graph)?)?))?;
            Ok(EXIT_OK)
        }
        Command::Occ { graph } => predicate_code(out, load_graph(&graph)?.odd_cycle_condition()?),
        Command::CommonVertex { graph } => predicate_code(out, load_graph(&graph)?.common_vertex_condition()?),
        Command::Decompose { g1, g2, alpha, k } => {
            let parts = theorem34_decompose(&load_graph(&g1)?, &load_graph(&g2)?, &alpha, k)?;
            emit(out, json!(parts))?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper {
            seed,
            max_k,
            sample_count,
            dim_cap,
            json,
        } => {
            let config = RunConfig {
                max_k,
                random_seed: seed,
                sample_count,
                dim_cap,
            };
            let checks = verify_paper(&config)?;
            if json {
                emit(out, serde_json::to_string_pretty(&checks).expect("serializable"))?;
            } else {
                write!(out, "{}", render_table(&config, &checks, color_enabled()))
                    .map_err(|e| Error::Input(format!("write failed: {e}")))?;
            }
            Ok(if all_passed(&checks) { EXIT_OK } else { EXIT_FAIL })
        }
    }
}
