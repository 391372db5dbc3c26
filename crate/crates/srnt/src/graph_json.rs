//! The graph interchange format.
//!
//! ```json
//! {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}
//! ```
//!
//! Vertices are `0..n`. Each edge is `[u, v]` with `u < v`; the edge list
//! is strictly increasing in lexicographic order, so there are no
//! duplicates. Writers always emit this canonical form.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use srnt_core::Graph;

use crate::error::FormatError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Parse and validate a graph file.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut prev: Option<[usize; 2]> = None;
    for (index, &[u, v]) in file.edges.iter().enumerate() {
        let bad = |message: String| FormatError::Edge { index, message };
        if u >= v {
            return Err(bad(format!("[{u}, {v}] must satisfy u < v")));
        }
        if v >= file.n {
            return Err(bad(format!(
                "[{u}, {v}] has a vertex outside 0..{}",
                file.n
            )));
        }
        if let Some(p) = prev {
            if p >= [u, v] {
                return Err(bad(format!(
                    "[{u}, {v}] does not follow [{}, {}] in lexicographic order",
                    p[0], p[1]
                )));
            }
        }
        prev = Some([u, v]);
    }
    Graph::from_edges(file.n, file.edges.iter().map(|&[u, v]| (u, v))).map_err(|e| {
        FormatError::Edge {
            index: 0,
            message: e.to_string(),
        }
    })
}

/// Canonical compact JSON for `g`.
pub fn to_json(g: &Graph) -> String {
    let file = GraphFile {
        n: g.vertex_count(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&file).expect("plain integers serialize")
}

/// SHA-256 of [`to_json`], hex encoded.
pub fn canonical_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(to_json(g).as_bytes()))
}
