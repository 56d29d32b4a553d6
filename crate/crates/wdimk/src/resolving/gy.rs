//! Auxiliary bipartite graph of a vertex set over a square Hamming graph.
//!
//! For `Y ⊆ V(K_n □ K_n)`, the graph `G_Y` has one node per row index, one
//! per column index, and an edge `i — j'` for every `(i, j) ∈ Y`. Its edge
//! count equals `|Y|`, and structural facts about it (no isolated nodes, no
//! 2-node components) characterise minimum weak 2-resolving sets for
//! `n >= 6`.

use super::{ResolvingError, VertexSet};
use crate::graph::Graph;

/// Bipartite row/column incidence graph of a cell set.
///
/// Nodes `0..n` are row indices, nodes `n..2n` are column indices.
#[derive(Clone, Debug)]
pub struct GyGraph {
    side: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Builds `G_Y` for a set over `K_n □ K_n`.
pub fn build_gy(g: &Graph, y: &VertexSet) -> Result<GyGraph, ResolvingError> {
    if y.graph_id() != g.id() {
        return Err(ResolvingError::GraphMismatch);
    }
    let n = match g.hamming2_dims() {
        Some((n, m)) if n == m => n as usize,
        _ => return Err(ResolvingError::NotSquareHamming),
    };
    let mut adjacency = vec![Vec::new(); 2 * n];
    for &v in y.members() {
        let row = v.index() / n;
        let col = v.index() % n;
        adjacency[row].push(n + col);
        adjacency[n + col].push(row);
    }
    Ok(GyGraph {
        side: n,
        adjacency,
        edge_count: y.len(),
    })
}

impl GyGraph {
    /// Number of nodes on each side (`n`).
    pub fn side(&self) -> usize {
        self.side
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree_of_row(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn degree_of_col(&self, j: usize) -> usize {
        self.adjacency[self.side + j].len()
    }

    pub fn isolated_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.is_empty()).count()
    }

    pub fn has_isolated(&self) -> bool {
        self.isolated_count() > 0
    }

    /// Node counts of the connected components, ascending.
    pub fn component_sizes(&self) -> Vec<usize> {
        let total = 2 * self.side;
        let mut seen = vec![false; total];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }

    /// A 2-node component is necessarily a single edge.
    pub fn has_k2_component(&self) -> bool {
        self.component_sizes().contains(&2)
    }
}
