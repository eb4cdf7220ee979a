//! Triangles and quadrilaterals of cubic plane graphs, and their contraction.
//!
//! When all 3- and 4-cycles are facial and pairwise disjoint, each of them
//! can be contracted to a vertex, giving a plane multigraph. A cycle of
//! length `l` shares at most `floor(l / 2)` edges with any single small
//! cycle. Summed over all small cycles the loss can be larger: truncated K4
//! has a 7-cycle whose image keeps only 3 edges.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{three_connectivity, ConnectivityError};
use crate::graph::{Color, Dart, GraphError, PlaneGraph, VertexId};
use crate::spectrum::{circumference, circumference_lower_bound, cycles_up_to, SpectrumError, MAX_UNFORCED_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("k must be in 2..=5, got {0}")]
    InvalidK(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
}

/// Every 3- and 4-cycle, as vertex sequences starting at the smallest vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallCycleSet {
    pub triangles: Vec<Vec<VertexId>>,
    pub quads: Vec<Vec<VertexId>>,
    pub all_facial: bool,
    pub pairwise_disjoint: bool,
}

impl SmallCycleSet {
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty() && self.quads.is_empty()
    }

    pub fn cycles(&self) -> impl Iterator<Item = &Vec<VertexId>> {
        self.triangles.iter().chain(&self.quads)
    }
}

fn edge_key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

fn cycle_edges(c: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut es: Vec<_> = (0..c.len()).map(|i| edge_key(c[i], c[(i + 1) % c.len()])).collect();
    es.sort_unstable();
    es
}

/// Short faces as (sorted edge list, dart walk).
type ShortFaces = Vec<(Vec<(VertexId, VertexId)>, Vec<Dart>)>;

fn face_edge_sets(g: &PlaneGraph) -> Option<ShortFaces> {
    let faces = g.faces().ok()?;
    Some(
        faces
            .into_iter()
            .filter(|f| f.len() <= 4)
            .map(|f| {
                let mut es: Vec<_> = f.darts.iter().map(|&d| edge_key(g.origin(d), g.head(d))).collect();
                es.sort_unstable();
                (es, f.darts)
            })
            .collect(),
    )
}

pub fn find_small_cycles(g: &PlaneGraph) -> SmallCycleSet {
    let n = g.vertex_count();
    let adj = g.simple_adjacency();
    let mut triangles = Vec::new();
    let mut quads = Vec::new();
    for s in 0..n {
        for &a in adj[s].iter().filter(|&&a| a > s) {
            for &b in adj[a].iter().filter(|&&b| b > s && b != a) {
                if adj[b].contains(&s) && b > a {
                    triangles.push(vec![s, a, b]);
                }
                for &c in adj[b].iter().filter(|&&c| c > s && c != a) {
                    if c > a && adj[c].contains(&s) {
                        quads.push(vec![s, a, b, c]);
                    }
                }
            }
        }
    }
    triangles.sort();
    quads.sort();

    let all_facial = match face_edge_sets(g) {
        Some(faces) => triangles.iter().chain(&quads).all(|c| faces.iter().any(|(es, _)| *es == cycle_edges(c))),
        None => triangles.is_empty() && quads.is_empty(),
    };
    let mut seen = vec![false; n];
    let mut pairwise_disjoint = true;
    for &v in triangles.iter().chain(&quads).flatten() {
        pairwise_disjoint &= !seen[v];
        seen[v] = true;
    }
    SmallCycleSet { triangles, quads, all_facial, pairwise_disjoint }
}

/// Contracts every listed cycle to one vertex, keeping parallel edges.
///
/// The new vertex's rotation lists the darts leaving the cycle, taken vertex
/// by vertex along the bounding face walk. Surviving vertices keep their
/// relative order; each contracted vertex takes the place of the smallest
/// vertex of its cycle.
pub fn contract_small_cycles(g: &PlaneGraph, s: &SmallCycleSet) -> Result<PlaneGraph, ReductionError> {
    if !s.pairwise_disjoint {
        return Err(ReductionError::PreconditionViolated("small cycles intersect".into()));
    }
    if !s.all_facial {
        return Err(ReductionError::PreconditionViolated("a small cycle does not bound a face".into()));
    }
    if s.is_empty() {
        return Ok(g.clone());
    }
    let faces = face_edge_sets(g).ok_or(GraphError::EmbeddingAbsent)?;
    let n = g.vertex_count();

    // Cluster representative for every vertex.
    let mut rep: Vec<VertexId> = (0..n).collect();
    let mut walks: HashMap<VertexId, Vec<Dart>> = HashMap::new();
    let mut dropped = vec![false; g.edge_count()];
    for c in s.cycles() {
        let es = cycle_edges(c);
        let (_, walk) = faces
            .iter()
            .find(|(f, _)| *f == es)
            .ok_or_else(|| ReductionError::PreconditionViolated(format!("cycle {c:?} is not a face")))?;
        let root = c[0];
        for &v in c {
            rep[v] = root;
        }
        for d in walk {
            dropped[d.edge()] = true;
        }
        walks.insert(root, walk.clone());
    }

    let mut new_edge = vec![usize::MAX; g.edge_count()];
    let mut m = 0;
    for e in 0..g.edge_count() {
        if !dropped[e] {
            let (u, v) = (g.origin(Dart(2 * e)), g.head(Dart(2 * e)));
            if rep[u] == rep[v] {
                return Err(ReductionError::PreconditionViolated(format!("edge {u}-{v} is a chord of a small cycle")));
            }
            new_edge[e] = m;
            m += 1;
        }
    }
    let map = |d: Dart| Dart(2 * new_edge[d.edge()] + (d.0 & 1));

    let mut new_id = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if rep[v] == v {
            new_id[v] = count;
            count += 1;
        }
    }
    let mut rotation = vec![Vec::new(); count];
    for v in 0..n {
        if rep[v] != v {
            continue;
        }
        rotation[new_id[v]] = match walks.get(&v) {
            None => g.rotation(v).iter().map(|&d| map(d)).collect(),
            Some(walk) => {
                let mut out = Vec::new();
                for (i, &d) in walk.iter().enumerate() {
                    // At the head of `d` the walk leaves by the successor of
                    // `twin(d)`; the darts between that and `twin(d)` leave the cycle.
                    let next = walk[(i + 1) % walk.len()];
                    let mut x = g.successor(next);
                    while x != d.twin() {
                        out.push(map(x));
                        x = g.successor(x);
                    }
                }
                out
            }
        };
    }
    Ok(PlaneGraph::from_darts(rotation, vec![Color::Plain; count])?)
}

fn certified_circumference_at_least(g: &PlaneGraph, k: usize) -> Result<bool, SpectrumError> {
    if circumference_lower_bound(g)? >= k {
        return Ok(true);
    }
    if g.vertex_count() <= MAX_UNFORCED_VERTICES {
        return Ok(circumference(g)? >= k);
    }
    Ok(false)
}

/// Whether some cycle length lies in `[k, 2k + 2]`, for `k` in `2..=5`.
///
/// Checked by bounded enumeration. The input must be a cubic, plane,
/// 3-connected graph of circumference at least `k`; a `false` answer on
/// such a graph would contradict the known small cases.
pub fn check_dagger_small_k(g: &PlaneGraph, k: usize) -> Result<bool, ReductionError> {
    if !(2..=5).contains(&k) {
        return Err(ReductionError::InvalidK(k));
    }
    if !g.is_cubic() {
        return Err(ReductionError::PreconditionViolated("graph is not cubic".into()));
    }
    if !g.euler_planarity_check() {
        return Err(ReductionError::PreconditionViolated("rotation system is not planar".into()));
    }
    if !three_connectivity(g)?.is_three_connected() {
        return Err(ReductionError::PreconditionViolated("graph is not 3-connected".into()));
    }
    if !certified_circumference_at_least(g, k)? {
        return Err(ReductionError::PreconditionViolated(format!("circumference below {k}")));
    }
    Ok(cycles_up_to(g, 2 * k + 2)?.meets(k, 2 * k + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_small_cycles() {
        let s = find_small_cycles(&fixtures::k4());
        assert_eq!(s.triangles.len(), 4);
        assert_eq!(s.quads.len(), 3);
        assert!(!s.pairwise_disjoint);
        assert!(!s.all_facial);
    }

    #[test]
    fn dodecahedron_has_none() {
        let g = fixtures::dodecahedron();
        let s = find_small_cycles(&g);
        assert!(s.is_empty() && s.all_facial && s.pairwise_disjoint);
        assert_eq!(contract_small_cycles(&g, &s).unwrap().rotation_lists(), g.rotation_lists());
    }

    #[test]
    fn prism_small_cycles() {
        let g = fixtures::triangular_prism();
        let s = find_small_cycles(&g);
        assert_eq!(s.triangles, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(s.quads.len(), 3);
        assert!(s.all_facial);
        assert!(!s.pairwise_disjoint);
    }

    #[test]
    fn prism_triangles_contract_to_theta() {
        let g = fixtures::triangular_prism();
        let mut s = find_small_cycles(&g);
        s.quads.clear();
        s.pairwise_disjoint = true;
        let h = contract_small_cycles(&g, &s).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 3);
        assert!(h.is_multigraph());
        assert!(h.euler_planarity_check());
    }

    #[test]
    fn cube_faces_intersect() {
        let g = fixtures::cube();
        let s = find_small_cycles(&g);
        assert_eq!(s.quads.len(), 6);
        assert!(matches!(contract_small_cycles(&g, &s), Err(ReductionError::PreconditionViolated(_))));
    }

    #[test]
    fn truncated_k4_contracts_to_k4() {
        let t = fixtures::truncate(&fixtures::k4());
        let s = find_small_cycles(&t);
        assert_eq!(s.triangles.len(), 4);
        assert!(s.quads.is_empty() && s.all_facial && s.pairwise_disjoint);
        let h = contract_small_cycles(&t, &s).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), t.edge_count() - 3 * 4);
        assert!(!h.is_multigraph());
        assert!(h.euler_planarity_check());
        assert_eq!(h.face_lengths().unwrap(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn dagger_small_cases() {
        assert!(check_dagger_small_k(&fixtures::k4(), 2).unwrap());
        assert!(check_dagger_small_k(&fixtures::dodecahedron(), 5).unwrap());
        assert!(check_dagger_small_k(&fixtures::cube(), 4).unwrap());
        assert_eq!(check_dagger_small_k(&fixtures::cube(), 6), Err(ReductionError::InvalidK(6)));
        assert!(matches!(check_dagger_small_k(&fixtures::k4(), 5), Err(ReductionError::PreconditionViolated(_))));
    }
}
