//! File formats, reports and the `srnt` command line on top of
//! [`srnt_core`].

use std::sync::OnceLock;

use srnt_core::constructions::{witt_design_22, KnownGraph, SteinerSystem};
use srnt_core::Graph;

pub mod cli;
mod error;
pub mod graph_json;
pub mod report;
pub mod sweep;
pub mod table;

pub use error::{CliError, FormatError};

static DESIGN: OnceLock<SteinerSystem> = OnceLock::new();

/// The Witt design S(3,6,22), built once per process.
pub fn shared_design() -> &'static SteinerSystem {
    DESIGN.get_or_init(|| witt_design_22().expect("the Witt design construction is deterministic"))
}

/// Build one of the six known graphs by name.
pub fn by_name(name: &str) -> srnt_core::Result<Graph> {
    let known: KnownGraph = name.parse()?;
    known.build(known.needs_design().then(shared_design))
}
