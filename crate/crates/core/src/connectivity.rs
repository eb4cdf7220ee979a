//! Vertex connectivity up to 3, by deletion and traversal.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("3-connectivity needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutKind {
    Cutvertex,
    TwoCut,
    None,
}

/// A separating vertex set, or `None` when the graph is 3-connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub kind: CutKind,
    pub vertices: Vec<VertexId>,
}

impl CutWitness {
    pub fn none() -> Self {
        Self { kind: CutKind::None, vertices: Vec::new() }
    }

    pub fn is_three_connected(&self) -> bool {
        self.kind == CutKind::None
    }
}

pub fn is_connected(g: &PlaneGraph) -> bool {
    g.is_connected()
}

/// True if removing `removed` leaves at least two vertices in different components.
pub fn separates(adj: &[Vec<VertexId>], removed: &[VertexId]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !seen[v]) else {
        return false;
    };
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().any(|s| !s)
}

/// Smallest separating set of size at most 2, compared lexicographically.
///
/// All single vertices are tried first, then all pairs `u < v`. Pairs are
/// scanned in parallel per first vertex; the minimum is taken afterwards so
/// the witness does not depend on scheduling.
pub fn three_connectivity(g: &PlaneGraph) -> Result<CutWitness, ConnectivityError> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(ConnectivityError::TooFewVertices(n));
    }
    let adj = g.simple_adjacency();
    if let Some(v) = (0..n).into_par_iter().find_first(|&v| separates(&adj, &[v])) {
        return Ok(CutWitness { kind: CutKind::Cutvertex, vertices: vec![v] });
    }
    let pair =
        (0..n).into_par_iter().find_map_first(|u| (u + 1..n).find(|&v| separates(&adj, &[u, v])).map(|v| (u, v)));
    Ok(match pair {
        Some((u, v)) => CutWitness { kind: CutKind::TwoCut, vertices: vec![u, v] },
        None => CutWitness::none(),
    })
}
