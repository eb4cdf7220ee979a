//! Cubic plane graphs whose cycle spectrum skips a long interval.
//!
//! The crate builds 3-connected cubic plane graphs `G(r, t)` with no cycle
//! length in `[2r + 6, 4r + 14]` and provides the tools to check them:
//! rotation-system graphs, 3-connectivity, bounded cycle enumeration,
//! small-cycle contraction and interchange formats.

pub mod connectivity;
pub mod fixtures;
pub mod gadget;
pub mod graph;
pub mod io;
pub mod reduction;
pub mod spectrum;

pub use connectivity::{three_connectivity, ConnectivityError, CutKind, CutWitness};
pub use gadget::transcription::{Slot, Transcription, TranscriptionError, TranscriptionKind};
pub use gadget::{
    base_graph_h, build_counterexample, gadget_a, gadget_b, substitute, verify_counterexample, BaseGraph, FamilyParams,
    Gadget, GadgetError, GadgetKind, Verdict, VerificationReport,
};
pub use graph::{Color, Dart, Embedding, FaceWalk, GraphBuilder, GraphError, PlaneGraph, VertexId};
pub use spectrum::{
    circumference, circumference_lower_bound, cycles_up_to, full_spectrum, gap_scan, girth, merker_interval_check,
    CycleSpectrum, GapReport, SpectrumError, SpectrumOptions,
};
