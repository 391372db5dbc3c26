//! Finite simple graphs on dense vertex ids `0..n`, stored as per-vertex
//! adjacency bitsets.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Immutable once built. Adjacency is symmetric and irreflexive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![BitSet::new(n); n],
        }
    }

    /// Build from an edge list. Edges may be given in either orientation
    /// and repeated; self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(alloc::format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(alloc::format!("self-loop at {u}")));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Graph on `0..n` with `u ~ v` iff `adjacent(u, v)`, queried for `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.rows[u].intersection_count(&self.rows[v])
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            out.extend(self.rows[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]` here.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| {
            self.is_adjacent(vertices[i], vertices[j])
        })
    }

    /// Copy with the edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.rows[u].remove(v);
        g.rows[v].remove(u);
        g
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for w in self.rows[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        IntMatrix::from_fn(n, n, |i, j| i64::from(self.is_adjacent(i, j)))
    }

    /// `A·m` using adjacency lists instead of a dense product.
    pub fn mul_matrix(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let n = self.vertex_count();
        if m.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: (n, m.cols()),
                found: (m.rows(), m.cols()),
            });
        }
        let mut out = IntMatrix::zeros(n, m.cols());
        for i in 0..n {
            for w in self.rows[i].iter() {
                out.add_row_from(i, m, w)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn edges_are_sorted_and_deduplicated() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3), (1, 2), (3, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 3), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    }

    #[test]
    fn distances_on_cycle() {
        let d = cycle(6).distances_from(0);
        assert_eq!(
            d,
            vec![Some(0), Some(1), Some(2), Some(3), Some(2), Some(1)]
        );
    }

    #[test]
    fn sparse_product_matches_dense() {
        let g = cycle(7);
        let a = g.adjacency_matrix();
        assert_eq!(g.mul_matrix(&a).unwrap(), a.mul(&a).unwrap());
    }
}
