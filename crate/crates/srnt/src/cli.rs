//! The `srnt` command line.
//!
//! Exit codes: 0 success or feasible, 1 infeasible or violation, 2 usage,
//! 3 arithmetic overflow, 4 I/O or malformed input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand};
use srnt_core::constructions::KnownGraph;
use srnt_core::engine::{verify_srnt, Violation};
use srnt_core::enumerate::{enumerate_for_q, enumerate_up_to_n};
use srnt_core::linked::linked_pair_family;
use srnt_core::params::{derive_from_kc, derive_from_qc};
use srnt_core::Int;

use crate::error::CliError;
use crate::graph_json::{canonical_hash, parse_graph, to_json};
use crate::report::{render_derive, render_linked, render_verify};
use crate::shared_design;
use crate::sweep::{full_sweep, SweepSummary};
use crate::table::{render, OutputFormat, TableRow};

#[derive(Debug, Parser)]
#[command(
    name = "srnt",
    version,
    about = "Strongly regular triangle-free graph parameters and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List feasible parameter sets for one λ₁ or up to a vertex count.
    #[command(group(ArgGroup::new("range").required(true).args(["q", "max_n"])))]
    Enumerate {
        #[arg(long)]
        q: Option<Int>,
        #[arg(long)]
        max_n: Option<Int>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Derive parameters from (k, c) or (λ₁, c) and check feasibility.
    #[command(group(ArgGroup::new("first").required(true).args(["k", "lambda"])))]
    Derive {
        #[arg(long, allow_hyphen_values = true)]
        k: Option<Int>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<Int>,
        #[arg(long, required = true, allow_hyphen_values = true)]
        c: Int,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Parameters of the linked pair with λ₁ = Q.
    LinkedPair {
        #[arg(long, allow_hyphen_values = true)]
        q: Int,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Write one of the six known graphs as JSON.
    Construct {
        /// petersen, clebsch, hoffman-singleton, gewirtz, m22 or higman-sims
        name: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the SHA-256 of the canonical JSON.
        #[arg(long)]
        canonical_hash: bool,
    },
    /// Check that a graph file is SRNT.
    Verify {
        file: PathBuf,
        /// Also run every subconstituent check at every vertex.
        #[arg(long)]
        full: bool,
    },
}

/// Parse `args` (including the program name), run, and return the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "srnt: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Output(e.to_string()))
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Enumerate { q, max_n, format } => {
            let rows = match (q, max_n) {
                (Some(q), None) => enumerate_for_q(q)?,
                (None, Some(n)) => enumerate_up_to_n(n)?,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --q and --max-n".into(),
                    ))
                }
            };
            let rows: Vec<TableRow> = rows.iter().map(TableRow::from).collect();
            emit(out, &render(&rows, format)?)?;
            Ok(0)
        }
        Command::Derive {
            k,
            lambda,
            c,
            format,
        } => {
            let report = match (k, lambda) {
                (Some(k), None) => derive_from_kc(k, c)?,
                (None, Some(q)) => derive_from_qc(q, c)?,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --k and --lambda".into(),
                    ))
                }
            };
            emit(out, &render_derive(&report, format)?)?;
            Ok(if report.is_feasible() { 0 } else { 1 })
        }
        Command::LinkedPair { q, format } => {
            emit(out, &render_linked(&linked_pair_family(q)?, format)?)?;
            Ok(0)
        }
        Command::Construct {
            name,
            out: path,
            canonical_hash: hash,
        } => {
            let known: KnownGraph = name.parse()?;
            let g = known.build(known.needs_design().then(shared_design))?;
            let mut text = to_json(&g);
            text.push('\n');
            match &path {
                Some(p) => {
                    fs::write(p, &text).map_err(|source| io_error(p, source))?;
                    let _ = writeln!(
                        err,
                        "wrote {}: {} vertices, {} edges",
                        p.display(),
                        g.vertex_count(),
                        g.edge_count()
                    );
                }
                None => emit(out, &text)?,
            }
            if hash {
                emit(out, &format!("{}\n", canonical_hash(&g)))?;
            }
            Ok(0)
        }
        Command::Verify { file, full } => {
            let text = fs::read_to_string(&file).map_err(|source| io_error(&file, source))?;
            let g = parse_graph(&text).map_err(|source| CliError::Format {
                path: file.display().to_string(),
                source,
            })?;
            let cert = match verify_srnt(&g) {
                Ok(cert) => cert,
                Err(Violation::Arithmetic(e)) => return Err(e.into()),
                Err(v) => {
                    emit(out, &format!("not SRNT: {v}\n"))?;
                    return Ok(1);
                }
            };
            let summary = full.then(|| SweepSummary::from_outcomes(&full_sweep(&g, &cert)));
            emit(out, &render_verify(&cert, summary.as_ref()))?;
            Ok(match summary {
                Some(s) if !s.passed() => 1,
                _ => 0,
            })
        }
    }
}

fn io_error(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        source,
    }
}
