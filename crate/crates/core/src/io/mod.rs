//! Reading and writing graphs: planar_code, graph6, transcriptions and DOT.

mod graph6;
mod planar_code;

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gadget::transcription::{Transcription, TranscriptionError};
use crate::graph::{Color, PlaneGraph};

pub use planar_code::HEADER as PLANAR_CODE_HEADER;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("missing or malformed header")]
    MalformedHeader,
    #[error("record {index} is truncated")]
    TruncatedRecord { index: usize },
    #[error("record {index} has a rotation system that fails the Euler check")]
    NonPlanarEmbedding { index: usize },
    #[error("record {index} is malformed: {msg}")]
    MalformedRecord { index: usize, msg: String },
    #[error("format limit exceeded: {0}")]
    FormatLimit(String),
    #[error("{0} is write-only")]
    WriteOnly(FormatTag),
    #[error(transparent)]
    Transcription(#[from] TranscriptionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormatTag {
    PlanarCode,
    Graph6,
    Transcription,
    Dot,
}

impl FormatTag {
    /// Guess from a file extension: `pc`, `g6`, `gadget`, `dot`.
    pub fn from_path(path: &Path) -> Option<FormatTag> {
        match path.extension()?.to_str()? {
            "pc" | "plc" => Some(FormatTag::PlanarCode),
            "g6" => Some(FormatTag::Graph6),
            "gadget" | "txt" => Some(FormatTag::Transcription),
            "dot" => Some(FormatTag::Dot),
            _ => None,
        }
    }
}

impl std::fmt::Display for FormatTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormatTag::PlanarCode => "planar_code",
            FormatTag::Graph6 => "graph6",
            FormatTag::Transcription => "transcription",
            FormatTag::Dot => "dot",
        })
    }
}

impl FromStr for FormatTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "planar_code" => Ok(FormatTag::PlanarCode),
            "graph6" => Ok(FormatTag::Graph6),
            "transcription" => Ok(FormatTag::Transcription),
            "dot" => Ok(FormatTag::Dot),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

pub fn write(g: &PlaneGraph, fmt: FormatTag) -> Result<Vec<u8>, FormatError> {
    write_all(std::slice::from_ref(g), fmt)
}

/// Writes several graphs into one document. Transcription and DOT hold one graph each.
pub fn write_all(graphs: &[PlaneGraph], fmt: FormatTag) -> Result<Vec<u8>, FormatError> {
    match fmt {
        FormatTag::PlanarCode => planar_code::write(graphs),
        FormatTag::Graph6 => graph6::write(graphs),
        FormatTag::Transcription | FormatTag::Dot if graphs.len() != 1 => {
            Err(FormatError::FormatLimit(format!("{fmt} holds exactly one graph")))
        }
        FormatTag::Transcription => {
            if graphs[0].is_multigraph() || !graphs[0].has_embedding() {
                return Err(FormatError::FormatLimit("transcriptions hold simple plane graphs".into()));
            }
            Ok(Transcription::from_graph(&graphs[0]).to_string().into_bytes())
        }
        FormatTag::Dot => Ok(dot(&graphs[0]).into_bytes()),
    }
}

pub fn read(bytes: &[u8], fmt: FormatTag) -> Result<Vec<PlaneGraph>, FormatError> {
    match fmt {
        FormatTag::PlanarCode => planar_code::read(bytes),
        FormatTag::Graph6 => graph6::read(bytes),
        FormatTag::Transcription => {
            let text = std::str::from_utf8(bytes).map_err(|_| FormatError::MalformedHeader)?;
            let g = Transcription::parse(text)?.to_graph()?;
            if !g.euler_planarity_check() {
                return Err(FormatError::NonPlanarEmbedding { index: 0 });
            }
            Ok(vec![g])
        }
        FormatTag::Dot => Err(FormatError::WriteOnly(FormatTag::Dot)),
    }
}

fn dot(g: &PlaneGraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match g.color(v) {
            Color::Black => writeln!(s, "  {v} [style=filled, fillcolor=black, fontcolor=white];"),
            Color::White => writeln!(s, "  {v} [style=filled, fillcolor=white];"),
            Color::Plain => Ok(()),
        }
        .expect("writing to a String");
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").expect("writing to a String");
    }
    s.push_str("}\n");
    s
}
