//! Plane graphs stored as rotation systems.
//!
//! Every undirected edge `e` is split into the two darts `2e` and `2e + 1`,
//! which are each other's twin. Each vertex keeps its outgoing darts in
//! counterclockwise order. Faces are the orbits of the permutation
//! `d -> successor(twin(d))`, where `successor` is the next dart in the
//! rotation at the head of `d`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    VertexOutOfRange { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {u} lists {v} but {v} does not list {u}")]
    AsymmetricAdjacency { u: VertexId, v: VertexId },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {vertex} lists itself")]
    SelfLoop { vertex: VertexId },
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("dart rotation is inconsistent: {0}")]
    InvalidDartRotation(String),
    #[error("graph carries no embedding")]
    EmbeddingAbsent,
}

/// A half-edge. Darts `2e` and `2e + 1` belong to edge `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart(pub usize);

impl Dart {
    #[inline]
    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    #[inline]
    pub fn edge(self) -> usize {
        self.0 >> 1
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// Vertex color tag used by the base graph of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
    #[default]
    Plain,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Black => f.write_str("black"),
            Color::White => f.write_str("white"),
            Color::Plain => f.write_str("plain"),
        }
    }
}

/// Whether the rotation stored in a graph is a meaningful embedding.
///
/// Graphs read from abstract formats (graph6) keep an arbitrary rotation
/// and are marked `Absent`; face operations refuse them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Embedding {
    Given,
    Absent,
}

/// The darts of one face, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices visited by the walk, in order (repeats possible).
    pub fn vertices(&self, g: &PlaneGraph) -> Vec<VertexId> {
        self.darts.iter().map(|&d| g.origin(d)).collect()
    }

    /// True if the boundary walk visits no vertex twice.
    pub fn is_simple_cycle(&self, g: &PlaneGraph) -> bool {
        let mut vs = self.vertices(g);
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    origin: Vec<VertexId>,
    rotation: Vec<Vec<Dart>>,
    slot: Vec<usize>,
    colors: Vec<Color>,
    multigraph: bool,
    embedding: Embedding,
}

/// Options for constructing a [`PlaneGraph`] from neighbor lists.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    lists: Vec<Vec<VertexId>>,
    colors: Option<Vec<Color>>,
    require_connected: bool,
    embedding: Embedding,
}

impl GraphBuilder {
    pub fn new(lists: Vec<Vec<VertexId>>) -> Self {
        Self { lists, colors: None, require_connected: true, embedding: Embedding::Given }
    }

    pub fn colors(mut self, colors: Vec<Color>) -> Self {
        self.colors = Some(colors);
        self
    }

    /// Skip the connectivity check (used for raw test inputs).
    pub fn allow_disconnected(mut self) -> Self {
        self.require_connected = false;
        self
    }

    pub fn embedding(mut self, embedding: Embedding) -> Self {
        self.embedding = embedding;
        self
    }

    pub fn build(self) -> Result<PlaneGraph, GraphError> {
        let n = self.lists.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (u, list) in self.lists.iter().enumerate() {
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: u, neighbor: v });
                }
                if v == u {
                    return Err(GraphError::SelfLoop { vertex: u });
                }
                if list[..i].contains(&v) {
                    return Err(GraphError::DuplicateNeighbor { vertex: u, neighbor: v });
                }
            }
        }
        for (u, list) in self.lists.iter().enumerate() {
            for &v in list {
                if !self.lists[v].contains(&u) {
                    return Err(GraphError::AsymmetricAdjacency { u, v });
                }
            }
        }

        // Edge ids follow the first appearance of {u, v} with u < v.
        let mut rotation: Vec<Vec<Dart>> = self.lists.iter().map(|l| Vec::with_capacity(l.len())).collect();
        let mut edge_of = std::collections::HashMap::new();
        let mut next_edge = 0usize;
        for (u, list) in self.lists.iter().enumerate() {
            for &v in list {
                let key = (u.min(v), u.max(v));
                let e = *edge_of.entry(key).or_insert_with(|| {
                    next_edge += 1;
                    next_edge - 1
                });
                let dart = if u < v { Dart(2 * e) } else { Dart(2 * e + 1) };
                rotation[u].push(dart);
            }
        }
        let colors = match self.colors {
            Some(c) if c.len() == n => c,
            Some(_) => {
                return Err(GraphError::InvalidDartRotation("color list length differs from vertex count".into()))
            }
            None => vec![Color::Plain; n],
        };
        let g = PlaneGraph::assemble(rotation, 2 * next_edge, colors, false, self.embedding)?;
        if self.require_connected && !g.is_connected() {
            return Err(GraphError::DisconnectedGraph);
        }
        Ok(g)
    }
}

impl PlaneGraph {
    /// Builds a simple, connected plane graph from counterclockwise neighbor lists.
    pub fn from_rotation(lists: &[Vec<VertexId>]) -> Result<Self, GraphError> {
        GraphBuilder::new(lists.to_vec()).build()
    }

    /// Builds a graph directly from dart rotations. Darts `2e`/`2e+1` are twins;
    /// every dart in `0..2E` must appear exactly once. Parallel edges are allowed
    /// and flag the result as a multigraph.
    pub fn from_darts(rotation: Vec<Vec<Dart>>, colors: Vec<Color>) -> Result<Self, GraphError> {
        let darts: usize = rotation.iter().map(Vec::len).sum();
        if rotation.is_empty() {
            return Err(GraphError::Empty);
        }
        if !darts.is_multiple_of(2) {
            return Err(GraphError::InvalidDartRotation("odd number of darts".into()));
        }
        let g = Self::assemble(rotation, darts, colors, true, Embedding::Given)?;
        if !g.is_connected() {
            return Err(GraphError::DisconnectedGraph);
        }
        Ok(g)
    }

    fn assemble(
        rotation: Vec<Vec<Dart>>,
        dart_count: usize,
        colors: Vec<Color>,
        check_multi: bool,
        embedding: Embedding,
    ) -> Result<Self, GraphError> {
        let mut origin = vec![usize::MAX; dart_count];
        let mut slot = vec![usize::MAX; dart_count];
        for (v, darts) in rotation.iter().enumerate() {
            for (i, d) in darts.iter().enumerate() {
                if d.0 >= dart_count || origin[d.0] != usize::MAX {
                    return Err(GraphError::InvalidDartRotation(format!("dart {} misplaced", d.0)));
                }
                origin[d.0] = v;
                slot[d.0] = i;
            }
        }
        if origin.contains(&usize::MAX) {
            return Err(GraphError::InvalidDartRotation("missing dart".into()));
        }
        let mut g = PlaneGraph { origin, rotation, slot, colors, multigraph: false, embedding };
        if check_multi {
            if (0..g.edge_count()).any(|e| g.origin[2 * e] == g.origin[2 * e + 1]) {
                return Err(GraphError::InvalidDartRotation("loop edge".into()));
            }
            let mut pairs: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
            pairs.sort_unstable();
            g.multigraph = pairs.windows(2).any(|w| w[0] == w[1]);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> VertexId {
        self.origin[d.0]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> VertexId {
        self.origin[d.twin().0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v]
    }

    /// Counterclockwise neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation[v].iter().map(move |&d| self.head(d))
    }

    /// Next dart counterclockwise around the origin of `d`.
    #[inline]
    pub fn successor(&self, d: Dart) -> Dart {
        let v = self.origin(d);
        let rot = &self.rotation[v];
        rot[(self.slot[d.0] + 1) % rot.len()]
    }

    /// Face permutation: the dart following `d` along its face.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.successor(d.twin())
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    pub fn embedding(&self) -> Embedding {
        self.embedding
    }

    pub fn has_embedding(&self) -> bool {
        self.embedding == Embedding::Given
    }

    /// Edges as `(origin of dart 2e, head of dart 2e)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.edge_count()).map(move |e| (self.origin[2 * e], self.origin[2 * e + 1]))
    }

    /// Counterclockwise neighbor lists; the inverse of [`PlaneGraph::from_rotation`].
    pub fn rotation_lists(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count()).map(|v| self.neighbors(v).collect()).collect()
    }

    /// Sorted, deduplicated neighbor lists of the underlying simple graph.
    pub fn simple_adjacency(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count())
            .map(|v| {
                let mut ns: Vec<_> = self.neighbors(v).collect();
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).any(|w| w == v)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_cubic(&self) -> bool {
        self.rotation.iter().all(|r| r.len() == 3)
    }

    /// Orbits of the face permutation, each starting at its smallest dart.
    pub fn faces(&self) -> Result<Vec<FaceWalk>, GraphError> {
        if !self.has_embedding() {
            return Err(GraphError::EmbeddingAbsent);
        }
        Ok(self.face_orbits())
    }

    fn face_orbits(&self) -> Vec<FaceWalk> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = Dart(start);
            while !seen[d.0] {
                seen[d.0] = true;
                darts.push(d);
                d = self.face_next(d);
            }
            faces.push(FaceWalk { darts });
        }
        faces
    }

    pub fn face_count(&self) -> Result<usize, GraphError> {
        self.faces().map(|f| f.len())
    }

    /// `V - E + F == 2` for the stored rotation. False for graphs without embedding.
    pub fn euler_planarity_check(&self) -> bool {
        if !self.has_embedding() {
            return false;
        }
        let f = self.face_orbits().len() as i64;
        self.vertex_count() as i64 - self.edge_count() as i64 + f == 2
    }

    pub fn min_face_length(&self) -> Result<usize, GraphError> {
        Ok(self.faces()?.iter().map(FaceWalk::len).min().unwrap_or(0))
    }

    /// Face lengths sorted ascending.
    pub fn face_lengths(&self) -> Result<Vec<usize>, GraphError> {
        let mut ls: Vec<usize> = self.faces()?.iter().map(FaceWalk::len).collect();
        ls.sort_unstable();
        Ok(ls)
    }

    /// Applies `perm` (old id -> new id) to every vertex, keeping each rotation.
    pub fn relabel(&self, perm: &[VertexId]) -> PlaneGraph {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        let n = self.vertex_count();
        let mut rotation = vec![Vec::new(); n];
        let mut colors = vec![Color::Plain; n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v].clone();
            colors[perm[v]] = self.colors[v];
        }
        let mut g = Self::assemble(rotation, self.dart_count(), colors, false, self.embedding)
            .expect("relabeling preserves dart structure");
        g.multigraph = self.multigraph;
        g
    }

    /// Same graph with a different color assignment.
    pub fn with_colors(mut self, colors: Vec<Color>) -> PlaneGraph {
        assert_eq!(colors.len(), self.vertex_count());
        self.colors = colors;
        self
    }

    /// Adjacency with `removed` vertices deleted. Plain lists, since the
    /// result may be disconnected.
    pub fn adjacency_without(&self, removed: &[VertexId]) -> Vec<Vec<VertexId>> {
        let mut gone = vec![false; self.vertex_count()];
        for &r in removed {
            gone[r] = true;
        }
        (0..self.vertex_count())
            .map(|v| if gone[v] { Vec::new() } else { self.neighbors(v).filter(|&w| !gone[w]).collect() })
            .collect()
    }
}
