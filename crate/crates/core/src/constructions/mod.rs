//! The six known SRNT graphs.
//!
//! Petersen, Clebsch and Hoffman-Singleton have direct constructions.
//! Gewirtz, M22 and Higman-Sims are built from the `S(3,6,22)` design in
//! [`witt`]. All constructions are deterministic.

use core::fmt;
use core::str::FromStr;

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub mod witt;

pub use witt::{witt_design_22, SteinerSystem};

/// Kneser graph `K(5, 2)`: 2-subsets of a 5-set, adjacent iff disjoint.
/// Subsets are listed lexicographically.
pub fn petersen() -> Graph {
    let mut pairs = alloc::vec::Vec::with_capacity(10);
    for a in 0..5u8 {
        for b in a + 1..5 {
            pairs.push(1u8 << a | 1 << b);
        }
    }
    Graph::from_fn(10, |i, j| pairs[i] & pairs[j] == 0)
}

/// The 16 binary 4-tuples, adjacent iff they differ in exactly one or in
/// all four coordinates.
pub fn clebsch() -> Graph {
    Graph::from_fn(16, |i, j| matches!((i ^ j).count_ones(), 1 | 4))
}

/// Robertson's construction from five pentagons `P_h` (vertices `5h + j`)
/// and five pentagrams `Q_i` (vertices `25 + 5i + j`), with vertex `j` of
/// `P_h` joined to vertex `hi + j mod 5` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j;
    let q = |i: usize, j: usize| 25 + 5 * i + j;
    let mut edges = alloc::vec::Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, (j + 1) % 5)));
            edges.push((q(h, j), q(h, (j + 2) % 5)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, (h * i + j) % 5)));
            }
        }
    }
    Graph::from_edges(50, edges).expect("Robertson edges are in range and loop-free")
}

/// The 77 blocks of the design, adjacent iff disjoint.
pub fn m22_graph(design: &SteinerSystem) -> Graph {
    let masks = design.block_masks();
    Graph::from_fn(masks.len(), |i, j| masks[i] & masks[j] == 0)
}

/// The 56 blocks avoiding `point`, in design order, adjacent iff disjoint.
pub fn gewirtz_graph(design: &SteinerSystem, point: usize) -> Result<Graph> {
    if point >= design.point_count {
        return Err(Error::InvalidParameters(alloc::format!(
            "point {point} is not in 0..{}",
            design.point_count
        )));
    }
    let masks: alloc::vec::Vec<u32> = design
        .block_masks()
        .into_iter()
        .filter(|m| m >> point & 1 == 0)
        .collect();
    Ok(Graph::from_fn(masks.len(), |i, j| masks[i] & masks[j] == 0))
}

/// Vertex 0 is a distinguished vertex joined to the 22 points
/// (vertices `1..=22`); each point is joined to the blocks containing it;
/// blocks (vertices `23..100`, design order) are joined iff disjoint.
pub fn higman_sims(design: &SteinerSystem) -> Graph {
    let points = design.point_count;
    let masks = design.block_masks();
    let first_block = 1 + points;
    Graph::from_fn(first_block + masks.len(), |u, v| {
        // u < v throughout.
        if u == 0 {
            v < first_block
        } else if u < first_block {
            v >= first_block && masks[v - first_block] >> (u - 1) & 1 == 1
        } else {
            masks[u - first_block] & masks[v - first_block] == 0
        }
    })
}

/// Point used for the Gewirtz graph when none is specified.
pub const GEWIRTZ_POINT: usize = witt::INFINITY;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnownGraph {
    Petersen,
    Clebsch,
    HoffmanSingleton,
    Gewirtz,
    M22,
    HigmanSims,
}

impl KnownGraph {
    pub const ALL: [KnownGraph; 6] = [
        KnownGraph::Petersen,
        KnownGraph::Clebsch,
        KnownGraph::HoffmanSingleton,
        KnownGraph::Gewirtz,
        KnownGraph::M22,
        KnownGraph::HigmanSims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KnownGraph::Petersen => "petersen",
            KnownGraph::Clebsch => "clebsch",
            KnownGraph::HoffmanSingleton => "hoffman-singleton",
            KnownGraph::Gewirtz => "gewirtz",
            KnownGraph::M22 => "m22",
            KnownGraph::HigmanSims => "higman-sims",
        }
    }

    /// `(k, c, n)`.
    pub fn parameters(self) -> (Int, Int, Int) {
        match self {
            KnownGraph::Petersen => (3, 1, 10),
            KnownGraph::Clebsch => (5, 2, 16),
            KnownGraph::HoffmanSingleton => (7, 1, 50),
            KnownGraph::Gewirtz => (10, 2, 56),
            KnownGraph::M22 => (16, 4, 77),
            KnownGraph::HigmanSims => (22, 6, 100),
        }
    }

    pub fn needs_design(self) -> bool {
        matches!(
            self,
            KnownGraph::Gewirtz | KnownGraph::M22 | KnownGraph::HigmanSims
        )
    }

    /// Build the graph. `design` is consulted only if [`needs_design`]
    /// and is built on the spot when absent.
    ///
    /// [`needs_design`]: KnownGraph::needs_design
    pub fn build(self, design: Option<&SteinerSystem>) -> Result<Graph> {
        let owned;
        let design = match (self.needs_design(), design) {
            (false, _) => None,
            (true, Some(d)) => Some(d),
            (true, None) => {
                owned = witt_design_22()?;
                Some(&owned)
            }
        };
        Ok(match (self, design) {
            (KnownGraph::Petersen, _) => petersen(),
            (KnownGraph::Clebsch, _) => clebsch(),
            (KnownGraph::HoffmanSingleton, _) => hoffman_singleton(),
            (KnownGraph::Gewirtz, Some(d)) => gewirtz_graph(d, GEWIRTZ_POINT)?,
            (KnownGraph::M22, Some(d)) => m22_graph(d),
            (KnownGraph::HigmanSims, Some(d)) => higman_sims(d),
            (_, None) => unreachable!("design resolved above"),
        })
    }
}

impl fmt::Display for KnownGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KnownGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KnownGraph::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGraph(s.into()))
    }
}

/// Look up a known graph by name, using `design` for the design-based ones.
pub fn by_name(name: &str, design: &SteinerSystem) -> Result<Graph> {
    name.parse::<KnownGraph>()?.build(Some(design))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts() {
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(clebsch().edge_count(), 40);
        assert_eq!(hoffman_singleton().edge_count(), 175);
        let d = witt_design_22().unwrap();
        assert_eq!(m22_graph(&d).edge_count(), 77 * 16 / 2);
        assert_eq!(gewirtz_graph(&d, 0).unwrap().edge_count(), 280);
        assert_eq!(higman_sims(&d).edge_count(), 1100);
    }

    #[test]
    fn names_round_trip() {
        for g in KnownGraph::ALL {
            assert_eq!(g.name().parse::<KnownGraph>().unwrap(), g);
        }
        assert_eq!(
            "kneser".parse::<KnownGraph>(),
            Err(Error::UnknownGraph("kneser".into()))
        );
    }

    #[test]
    fn by_name_dispatch() {
        let d = witt_design_22().unwrap();
        assert_eq!(by_name("petersen", &d).unwrap().vertex_count(), 10);
        assert_eq!(by_name("higman-sims", &d).unwrap().vertex_count(), 100);
        assert!(by_name("kneser", &d).is_err());
    }

    #[test]
    fn gewirtz_point_out_of_range() {
        let d = witt_design_22().unwrap();
        assert!(gewirtz_graph(&d, 22).is_err());
    }
}
