//! The base graph `H(t)` and the counterexample family `G(r, t)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::data;
use super::transcription::{Transcription, TranscriptionKind};
use super::{invalid, substitute, Gadget, GadgetError};
use crate::connectivity::{three_connectivity, CutWitness};
use crate::graph::{Color, PlaneGraph, VertexId};
use crate::spectrum::{circumference_lower_bound, cycles_up_to_with, SpectrumOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub r: usize,
    pub t: usize,
}

impl FamilyParams {
    pub fn new(r: usize, t: usize) -> Result<Self, GadgetError> {
        if t == 0 {
            return Err(GadgetError::InvalidParams("t must be at least 1".into()));
        }
        Ok(Self { r, t })
    }

    /// Smallest `t` whose boundary faces have length at least `2r + 8`.
    pub fn t_min(r: usize) -> Result<usize, GadgetError> {
        let mut t = 1;
        loop {
            if base_graph_h(t)?.min_boundary() >= min_boundary(r) {
                return Ok(t);
            }
            t += 1;
        }
    }

    pub fn with_t_min(r: usize) -> Result<Self, GadgetError> {
        Ok(Self { r, t: Self::t_min(r)? })
    }

    pub fn k(&self) -> usize {
        2 * self.r + 6
    }

    pub fn gap_interval(&self) -> (usize, usize) {
        (2 * self.r + 6, 4 * self.r + 14)
    }

    pub fn long_face_length(&self) -> usize {
        4 * self.r + 15
    }

    /// Largest gadget circumference, `2r + 5`.
    pub fn short_cycle_bound(&self) -> usize {
        2 * self.r + 5
    }
}

fn min_boundary(r: usize) -> usize {
    2 * r + 8
}

#[derive(Debug, Clone)]
pub struct BaseGraph {
    pub graph: PlaneGraph,
    pub t: usize,
    /// Lengths of the two faces surrounded by pentagons, smaller first.
    pub boundary_lengths: (usize, usize),
}

impl BaseGraph {
    pub fn min_boundary(&self) -> usize {
        self.boundary_lengths.0
    }

    pub fn color_counts(&self) -> (usize, usize) {
        let black = self.graph.colors().iter().filter(|&&c| c == Color::Black).count();
        (black, self.graph.vertex_count() - black)
    }
}

/// Faces that are not pentagons but whose every neighboring face is one.
fn boundary_faces(g: &PlaneGraph) -> Option<Vec<usize>> {
    let faces = g.faces().ok()?;
    let mut face_of = vec![0; g.dart_count()];
    for (i, f) in faces.iter().enumerate() {
        for d in &f.darts {
            face_of[d.index()] = i;
        }
    }
    let mut out: Vec<usize> = faces
        .iter()
        .filter(|f| f.len() != 5 && f.darts.iter().all(|d| faces[face_of[d.twin().index()]].len() == 5))
        .map(|f| f.len())
        .collect();
    out.sort_unstable();
    Some(out)
}

/// Checks a base graph transcription: cubic, plane, fully colored, and with
/// exactly two boundary faces.
pub fn validate_base(t: &Transcription) -> Result<BaseGraph, GadgetError> {
    if t.kind != TranscriptionKind::H {
        return Err(invalid(format!("expected kind H, found {}", t.kind)));
    }
    let g = t.to_graph().map_err(|e| invalid(format!("base graph: {e}")))?;
    if !g.is_cubic() {
        return Err(invalid("base graph is not cubic"));
    }
    if !g.euler_planarity_check() {
        return Err(invalid("base graph fails the Euler check"));
    }
    if let Some(v) = g.colors().iter().position(|&c| c == Color::Plain) {
        return Err(invalid(format!("base vertex {v} has no color")));
    }
    match boundary_faces(&g).as_deref() {
        Some(&[a, b]) => Ok(BaseGraph { graph: g, t: t.rungs, boundary_lengths: (a, b) }),
        _ => Err(invalid("base graph must have exactly two faces surrounded by pentagons")),
    }
}

pub fn base_graph_h(t: usize) -> Result<BaseGraph, GadgetError> {
    if t == 0 {
        return Err(GadgetError::InvalidParams("t must be at least 1".into()));
    }
    validate_base(&data::transcription(TranscriptionKind::H, t)?)
}

/// Everything the builder consumes, exposed so tests can corrupt any part.
#[derive(Debug, Clone)]
pub struct CounterexampleInputs {
    pub params: FamilyParams,
    pub base: Transcription,
    pub a: Transcription,
    pub b: Transcription,
    /// Weld offsets differing from 0, by base vertex.
    pub offsets: BTreeMap<VertexId, u8>,
}

impl CounterexampleInputs {
    pub fn standard(params: FamilyParams) -> Result<Self, GadgetError> {
        Ok(Self {
            params,
            base: data::transcription(TranscriptionKind::H, params.t)?,
            a: data::transcription(TranscriptionKind::A, params.r + 2)?,
            b: data::transcription(TranscriptionKind::B, params.r)?,
            offsets: BTreeMap::new(),
        })
    }
}

/// Substitutes `A` for every black and `B` for every white vertex of `base`.
pub fn assemble(
    base: &PlaneGraph,
    a: &Gadget,
    b: &Gadget,
    offsets: &BTreeMap<VertexId, u8>,
) -> Result<PlaneGraph, GadgetError> {
    let mut g = base.clone();
    for v in 0..base.vertex_count() {
        let gadget = match base.color(v) {
            Color::Black => a,
            Color::White => b,
            Color::Plain => return Err(invalid(format!("base vertex {v} has no color"))),
        };
        g = substitute(&g, v, gadget, offsets.get(&v).copied().unwrap_or(0))?;
    }
    Ok(g)
}

fn check_boundary(params: FamilyParams, base: &BaseGraph) -> Result<(), GadgetError> {
    let needed = min_boundary(params.r);
    if base.min_boundary() < needed {
        return Err(GadgetError::BoundaryTooShort { boundary: base.min_boundary(), needed });
    }
    Ok(())
}

/// `G(r, t)`: `H(t)` with black vertices replaced by `A_{r+2}` and white
/// ones by `B_r`.
pub fn build_counterexample(params: FamilyParams) -> Result<PlaneGraph, GadgetError> {
    let base = base_graph_h(params.t)?;
    check_boundary(params, &base)?;
    assemble(
        &base.graph,
        &gadget_for(params, TranscriptionKind::A)?,
        &gadget_for(params, TranscriptionKind::B)?,
        &BTreeMap::new(),
    )
}

fn gadget_for(params: FamilyParams, kind: TranscriptionKind) -> Result<Gadget, GadgetError> {
    match kind {
        TranscriptionKind::A => super::gadget_a(params.r + 2),
        _ => super::gadget_b(params.r),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { clause: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub r: usize,
    pub t: usize,
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    pub cubic: bool,
    pub planar: bool,
    pub three_connected: bool,
    pub cut: CutWitness,
    pub boundary_lengths: (usize, usize),
    /// Shortest face longer than `2r + 5`.
    pub long_face_length: Option<usize>,
    /// Number of faces of that length.
    pub long_face_count: usize,
    pub gap_interval: (usize, usize),
    pub gap_verified: bool,
    /// Cycle lengths found up to `4r + 14`.
    pub low_spectrum: BTreeSet<usize>,
    pub circumference_lower_bound: usize,
    pub verdict: Verdict,
}

pub fn verify_counterexample(params: FamilyParams) -> Result<VerificationReport, GadgetError> {
    let base = base_graph_h(params.t)?;
    check_boundary(params, &base)?;
    verify_inputs(&CounterexampleInputs::standard(params)?)
}

/// Runs the whole pipeline on possibly corrupted inputs.
///
/// Gadget transcriptions must pass their own gates. The base transcription
/// only has to describe a simple colored graph, so that a broken base shows
/// up as a failed clause in the report.
pub fn verify_inputs(inputs: &CounterexampleInputs) -> Result<VerificationReport, GadgetError> {
    let params = inputs.params;
    let a = Gadget::from_transcription(inputs.a.clone())?;
    let b = Gadget::from_transcription(inputs.b.clone())?;
    if a.kind() != super::GadgetKind::A || a.rungs() != params.r + 2 {
        return Err(invalid(format!("expected A_{}", params.r + 2)));
    }
    if b.kind() != super::GadgetKind::B || b.rungs() != params.r {
        return Err(invalid(format!("expected B_{}", params.r)));
    }
    let base = inputs.base.to_graph().map_err(|e| invalid(format!("base graph: {e}")))?;
    let g = assemble(&base, &a, &b, &inputs.offsets)?;

    let (gap_lo, gap_hi) = params.gap_interval();
    let cubic = g.is_cubic();
    let planar = g.euler_planarity_check();
    let cut = three_connectivity(&g)?;
    let boundary = match boundary_faces(&base).as_deref() {
        Some(&[x, y]) if base.euler_planarity_check() => (x, y),
        _ => (0, 0),
    };
    let (long_face_length, long_face_count) = if planar {
        let long: Vec<usize> = g.face_lengths()?.into_iter().filter(|&l| l > params.short_cycle_bound()).collect();
        let min = long.iter().copied().min();
        (min, long.iter().filter(|&&l| Some(l) == min).count())
    } else {
        (None, 0)
    };
    let spectrum = cycles_up_to_with(&g, gap_hi, &SpectrumOptions::forced())?;
    let gap_verified = !spectrum.meets(gap_lo, gap_hi);
    let circ = if planar { circumference_lower_bound(&g)? } else { 0 };

    let clause = if !cubic {
        Some("graph is not cubic".to_string())
    } else if !planar {
        Some("rotation system fails the Euler check".to_string())
    } else if !cut.is_three_connected() {
        Some(format!("separated by {:?}", cut.vertices))
    } else if boundary.0 < min_boundary(params.r) {
        Some(format!("boundary faces {boundary:?} shorter than {}", min_boundary(params.r)))
    } else if long_face_length != Some(params.long_face_length()) {
        Some(format!("shortest long face has length {long_face_length:?}, expected {}", params.long_face_length()))
    } else if !gap_verified {
        let l = spectrum.lengths.range(gap_lo..=gap_hi).next().copied().unwrap_or_default();
        Some(format!("cycle of length {l} inside [{gap_lo}, {gap_hi}]"))
    } else if circ < params.long_face_length() || circ < params.k() {
        Some(format!("circumference lower bound {circ} below {}", params.long_face_length()))
    } else {
        None
    };

    Ok(VerificationReport {
        r: params.r,
        t: params.t,
        k: params.k(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        cubic,
        planar,
        three_connected: cut.is_three_connected(),
        cut,
        boundary_lengths: boundary,
        long_face_length,
        long_face_count,
        gap_interval: (gap_lo, gap_hi),
        gap_verified,
        low_spectrum: spectrum.lengths,
        circumference_lower_bound: circ,
        verdict: clause.map_or(Verdict::Pass, |clause| Verdict::Fail { clause }),
    })
}
