//! Vertex gadgets with three ports and the substitution operation.
//!
//! `A_s` is a ladder with `s` rungs whose top is closed by an apex vertex;
//! the apex carries port 1 and the two bottom corners carry ports 2 and 3.
//! `B_r` is a ladder with `r` rungs between a bottom vertex (port 1) and a
//! triangle-and-pentagon cap holding ports 2 and 3. Both are hamiltonian
//! fragments, so their circumference equals their vertex count: `2s + 1`
//! for `A_s` and `2r + 5` for `B_r`.
//!
//! In both gadgets ports 2 and 3 are close (1 edge in `A_s`, 2 edges in
//! `B_r`) while port 1 is far from the other two.

pub mod data;
pub mod family;
pub mod transcription;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{three_connectivity, ConnectivityError};
use crate::graph::{Color, GraphBuilder, GraphError, PlaneGraph, VertexId};
use crate::spectrum::{circumference, SpectrumError, MAX_UNFORCED_VERTICES};
use transcription::{Slot, Transcription, TranscriptionError, TranscriptionKind};

pub use family::{
    base_graph_h, build_counterexample, verify_counterexample, BaseGraph, CounterexampleInputs, FamilyParams, Verdict,
    VerificationReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("transcription invalid: {invariant}")]
    TranscriptionInvalid { invariant: String },
    #[error("vertex {0} does not have degree 3")]
    NonCubicVertex(VertexId),
    #[error("welding the gadget at vertex {0} creates a parallel edge")]
    WeldCreatesParallelEdge(VertexId),
    #[error("boundary faces have length {boundary}, need at least {needed}")]
    BoundaryTooShort { boundary: usize, needed: usize },
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("orientation offset must be 0, 1 or 2, got {0}")]
    InvalidOffset(u8),
    #[error("cannot read {path}: {msg}")]
    DataFile { path: String, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error(transparent)]
    Transcription(#[from] TranscriptionError),
}

pub(crate) fn invalid(invariant: impl Into<String>) -> GadgetError {
    GadgetError::TranscriptionInvalid { invariant: invariant.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GadgetKind {
    A,
    B,
}

#[derive(Debug, Clone)]
pub struct Gadget {
    kind: GadgetKind,
    rungs: usize,
    transcription: Transcription,
    interior: PlaneGraph,
    /// Vertex carrying port 1, 2, 3.
    ports: [VertexId; 3],
    circumference: Option<usize>,
}

impl Gadget {
    pub fn kind(&self) -> GadgetKind {
        self.kind
    }

    pub fn rungs(&self) -> usize {
        self.rungs
    }

    pub fn interior(&self) -> &PlaneGraph {
        &self.interior
    }

    pub fn ports(&self) -> [VertexId; 3] {
        self.ports
    }

    pub fn transcription(&self) -> &Transcription {
        &self.transcription
    }

    /// Interior circumference, when it was small enough to compute exactly.
    pub fn circumference(&self) -> Option<usize> {
        self.circumference
    }

    pub fn vertex_count(&self) -> usize {
        self.interior.vertex_count()
    }

    /// Expected interior circumference: `2s + 1` for `A_s`, `2r + 5` for `B_r`.
    pub fn expected_circumference(kind: GadgetKind, rungs: usize) -> usize {
        match kind {
            GadgetKind::A => 2 * rungs + 1,
            GadgetKind::B => 2 * rungs + 5,
        }
    }

    /// Shortest interior path lengths between ports `(1,2)`, `(2,3)`, `(3,1)`.
    pub fn port_distances(&self) -> [usize; 3] {
        let d = |a: usize, b: usize| bfs_distance(&self.interior, self.ports[a], self.ports[b]);
        [d(0, 1), d(1, 2), d(2, 0)]
    }

    /// The interior closed off by one extra vertex joined to the three ports.
    pub fn capped(&self) -> Result<PlaneGraph, GraphError> {
        capped_graph(&self.transcription)
    }

    /// Validates a transcription against every gadget invariant.
    pub fn from_transcription(t: Transcription) -> Result<Gadget, GadgetError> {
        let kind = match t.kind {
            TranscriptionKind::A => GadgetKind::A,
            TranscriptionKind::B => GadgetKind::B,
            TranscriptionKind::H => return Err(invalid("kind H is a base graph, not a gadget")),
        };
        if kind == GadgetKind::A && t.rungs < 2 {
            return Err(invalid("A gadgets need at least 2 rungs"));
        }

        let mut ports = [usize::MAX; 3];
        for (v, rot) in t.rotations.iter().enumerate() {
            for s in rot {
                if let Slot::Port(p) = s {
                    let p = *p as usize - 1;
                    if ports[p] != usize::MAX {
                        return Err(invalid(format!("port P{} appears twice", p + 1)));
                    }
                    ports[p] = v;
                }
            }
        }
        if ports.contains(&usize::MAX) {
            return Err(invalid("exactly three ports P1, P2, P3 are required"));
        }
        if ports[0] == ports[1] || ports[1] == ports[2] || ports[0] == ports[2] {
            return Err(invalid("ports must sit on distinct vertices"));
        }

        let interior = GraphBuilder::new(t.interior_lists())
            .build()
            .map_err(|e| invalid(format!("interior is not a simple connected graph: {e}")))?;
        for v in 0..interior.vertex_count() {
            let want = if ports.contains(&v) { 2 } else { 3 };
            if interior.degree(v) != want {
                return Err(invalid(format!("vertex {v} has interior degree {}, expected {want}", interior.degree(v))));
            }
        }

        let capped = capped_graph(&t).map_err(|e| invalid(format!("capped gadget: {e}")))?;
        if !capped.euler_planarity_check() {
            return Err(invalid("capped gadget fails the Euler check (port order or rotation wrong)"));
        }
        if !three_connectivity(&capped)?.is_three_connected() {
            return Err(invalid("capped gadget is not 3-connected"));
        }

        let circumference = if interior.vertex_count() <= MAX_UNFORCED_VERTICES {
            let c = circumference(&interior)?;
            let want = Gadget::expected_circumference(kind, t.rungs);
            if c != want {
                return Err(invalid(format!("interior circumference is {c}, expected {want}")));
            }
            Some(c)
        } else {
            None
        };

        Ok(Gadget { kind, rungs: t.rungs, transcription: t, interior, ports, circumference })
    }
}

fn bfs_distance(g: &PlaneGraph, from: VertexId, to: VertexId) -> usize {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[from] = 0;
    let mut q = VecDeque::from([from]);
    while let Some(v) = q.pop_front() {
        if v == to {
            return dist[v];
        }
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    usize::MAX
}

/// Adds a cap vertex in the outer face; its rotation lists the ports in
/// the order 1, 3, 2, which is the clockwise port order seen from inside.
fn capped_graph(t: &Transcription) -> Result<PlaneGraph, GraphError> {
    let cap = t.rotations.len();
    let mut lists: Vec<Vec<VertexId>> = t
        .rotations
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| match s {
                    Slot::Vertex(v) => *v,
                    Slot::Port(_) => cap,
                })
                .collect()
        })
        .collect();
    let port_vertex = |p: u8| t.rotations.iter().position(|r| r.contains(&Slot::Port(p))).unwrap_or(usize::MAX);
    lists.push(vec![port_vertex(1), port_vertex(3), port_vertex(2)]);
    PlaneGraph::from_rotation(&lists)
}

pub fn gadget_a(s: usize) -> Result<Gadget, GadgetError> {
    if s < 2 {
        return Err(GadgetError::InvalidParams(format!("A_s needs s >= 2, got {s}")));
    }
    Gadget::from_transcription(data::transcription(TranscriptionKind::A, s)?)
}

pub fn gadget_b(r: usize) -> Result<Gadget, GadgetError> {
    Gadget::from_transcription(data::transcription(TranscriptionKind::B, r)?)
}

/// Replaces the cubic vertex `v` by the gadget interior.
///
/// With `v`'s counterclockwise neighbors `n0, n1, n2`, port `p` is welded to
/// `n[(p - 1 + offset) % 3]`. The first gadget vertex reuses id `v`; the
/// others are appended after the existing vertices.
pub fn substitute(g: &PlaneGraph, v: VertexId, gadget: &Gadget, offset: u8) -> Result<PlaneGraph, GadgetError> {
    if offset > 2 {
        return Err(GadgetError::InvalidOffset(offset));
    }
    if g.degree(v) != 3 {
        return Err(GadgetError::NonCubicVertex(v));
    }
    let base = g.vertex_count();
    let id = |x: VertexId| if x == 0 { v } else { base + x - 1 };
    let nbrs: Vec<VertexId> = g.neighbors(v).collect();
    let attached = |p: u8| nbrs[(p as usize - 1 + offset as usize) % 3];

    let mut lists = g.rotation_lists();
    let mut colors = g.colors().to_vec();
    lists.resize(base + gadget.vertex_count() - 1, Vec::new());
    colors.resize(base + gadget.vertex_count() - 1, Color::Plain);
    colors[v] = Color::Plain;

    for (p, &port_vertex) in gadget.ports.iter().enumerate() {
        let n = attached(p as u8 + 1);
        let pos = lists[n].iter().position(|&x| x == v).expect("symmetric adjacency");
        lists[n][pos] = id(port_vertex);
    }
    for (x, rot) in gadget.transcription.rotations.iter().enumerate() {
        lists[id(x)] = rot
            .iter()
            .map(|s| match s {
                Slot::Vertex(y) => id(*y),
                Slot::Port(p) => attached(*p),
            })
            .collect();
    }
    let out = GraphBuilder::new(lists).colors(colors).build().map_err(|e| match e {
        GraphError::DuplicateNeighbor { .. } => GadgetError::WeldCreatesParallelEdge(v),
        other => GadgetError::Graph(other),
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a_gadget_circumference_and_rungs() {
        for s in 2..=6 {
            let a = gadget_a(s).unwrap();
            assert_eq!(a.rungs(), s);
            assert_eq!(a.circumference(), Some(2 * s + 1));
            assert_eq!(a.vertex_count(), 2 * s + 1);
            assert_eq!(a.port_distances(), [s, 1, s]);
        }
        assert_eq!(gadget_a(2).unwrap().circumference(), Some(5));
        assert_eq!(gadget_a(3).unwrap().circumference(), Some(7));
    }

    #[test]
    fn b_gadget_circumference() {
        for r in 0..=4 {
            let b = gadget_b(r).unwrap();
            assert_eq!(b.rungs(), r);
            assert_eq!(b.circumference(), Some(2 * r + 5));
            assert_eq!(b.vertex_count(), 2 * r + 5);
            assert_eq!(b.port_distances(), [r + 2, 2, r + 1]);
        }
        assert_eq!(gadget_b(0).unwrap().circumference(), Some(5));
        assert_eq!(gadget_b(2).unwrap().circumference(), Some(9));
    }

    #[test]
    fn ports_are_three_labeled_darts() {
        let b = gadget_b(1).unwrap();
        let mut labels: Vec<u8> = b
            .transcription()
            .rotations
            .iter()
            .flatten()
            .filter_map(|s| match s {
                Slot::Port(p) => Some(*p),
                _ => None,
            })
            .collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![1, 2, 3]);
        assert!(b.capped().unwrap().euler_planarity_check());
    }

    #[test]
    fn reversed_port_order_is_rejected() {
        let mut t = data::transcription_a(3);
        for rot in &mut t.rotations {
            for s in rot.iter_mut() {
                *s = match *s {
                    Slot::Port(2) => Slot::Port(3),
                    Slot::Port(3) => Slot::Port(2),
                    other => other,
                };
            }
        }
        let err = Gadget::from_transcription(t).unwrap_err();
        assert!(matches!(err, GadgetError::TranscriptionInvalid { .. }), "{err}");
    }

    #[test]
    fn substitute_into_k4() {
        let g = fixtures::k4();
        let b = gadget_b(0).unwrap();
        for offset in 0..3 {
            let h = substitute(&g, 0, &b, offset).unwrap();
            assert_eq!(h.vertex_count(), 3 + b.vertex_count());
            assert!(h.is_cubic());
            assert!(h.euler_planarity_check());
        }
    }

    #[test]
    fn substitute_everywhere_keeps_planarity() {
        for (name, g) in fixtures::named() {
            let a = gadget_a(3).unwrap();
            let mut h = g.clone();
            for v in 0..g.vertex_count() {
                h = substitute(&h, v, &a, (v % 3) as u8).unwrap();
            }
            assert!(h.is_cubic(), "{name}");
            assert!(h.euler_planarity_check(), "{name}");
            assert_eq!(h.vertex_count(), g.vertex_count() * a.vertex_count());
        }
    }

    #[test]
    fn substitute_rejects_degree_two() {
        let g = fixtures::k4_subdivided();
        let a = gadget_a(2).unwrap();
        assert_eq!(substitute(&g, 4, &a, 0).unwrap_err(), GadgetError::NonCubicVertex(4));
        assert_eq!(substitute(&g, 0, &a, 3).unwrap_err(), GadgetError::InvalidOffset(3));
    }
}
