//! Line-oriented text format for gadgets and base graphs.
//!
//! ```text
//! gadget A rungs=2 version=1
//! 0 : P1 1 3
//! 1 : 3 0 2
//! ...
//! ```
//!
//! Each vertex line lists the counterclockwise neighbors of one vertex.
//! `P1`, `P2`, `P3` stand for the dangling port darts of a gadget. Base
//! graph lines may end with a `#black` or `#white` color tag. Vertex ids
//! must be dense and appear in increasing order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Color, GraphBuilder, GraphError, PlaneGraph, VertexId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranscriptionError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("transcription has ports; it is a gadget, not a graph")]
    HasPorts,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TranscriptionKind {
    A,
    B,
    H,
}

impl fmt::Display for TranscriptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TranscriptionKind::A => "A",
            TranscriptionKind::B => "B",
            TranscriptionKind::H => "H",
        })
    }
}

impl FromStr for TranscriptionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "H" => Ok(Self::H),
            other => Err(format!("unknown gadget kind `{other}`")),
        }
    }
}

/// One entry of a rotation list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Vertex(VertexId),
    /// Port number 1, 2 or 3.
    Port(u8),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcription {
    pub kind: TranscriptionKind,
    pub rungs: usize,
    pub version: u32,
    pub rotations: Vec<Vec<Slot>>,
    pub colors: Vec<Color>,
}

impl Transcription {
    /// Transcription of a plain plane graph (no ports).
    pub fn from_graph(g: &PlaneGraph) -> Self {
        Self {
            kind: TranscriptionKind::H,
            rungs: 0,
            version: FORMAT_VERSION,
            rotations: g.rotation_lists().into_iter().map(|l| l.into_iter().map(Slot::Vertex).collect()).collect(),
            colors: g.colors().to_vec(),
        }
    }

    pub fn has_ports(&self) -> bool {
        self.rotations.iter().flatten().any(|s| matches!(s, Slot::Port(_)))
    }

    /// The plane graph described, for transcriptions without ports.
    pub fn to_graph(&self) -> Result<PlaneGraph, TranscriptionError> {
        if self.has_ports() {
            return Err(TranscriptionError::HasPorts);
        }
        Ok(GraphBuilder::new(self.interior_lists()).colors(self.colors.clone()).build()?)
    }

    /// Rotation lists with port entries dropped.
    pub fn interior_lists(&self) -> Vec<Vec<VertexId>> {
        self.rotations
            .iter()
            .map(|r| {
                r.iter()
                    .filter_map(|s| match s {
                        Slot::Vertex(v) => Some(*v),
                        Slot::Port(_) => None,
                    })
                    .collect()
            })
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self, TranscriptionError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let syntax = |line: usize, msg: &str| TranscriptionError::Syntax { line, msg: msg.to_string() };

        let (hline, header) = lines.next().ok_or_else(|| syntax(1, "empty transcription"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "gadget" {
            return Err(syntax(hline, "expected `gadget <A|B|H> rungs=<r> version=<n>`"));
        }
        let kind = fields[1].parse().map_err(|e: String| syntax(hline, &e))?;
        let rungs = fields[2]
            .strip_prefix("rungs=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| syntax(hline, "bad rungs field"))?;
        let version = fields[3]
            .strip_prefix("version=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| syntax(hline, "bad version field"))?;
        if version != FORMAT_VERSION {
            return Err(syntax(hline, &format!("unsupported version {version}")));
        }

        let mut rotations = Vec::new();
        let mut colors = Vec::new();
        for (ln, line) in lines {
            let (id, rest) = line.split_once(':').ok_or_else(|| syntax(ln, "missing `:`"))?;
            let id: usize = id.trim().parse().map_err(|_| syntax(ln, "bad vertex id"))?;
            if id != rotations.len() {
                return Err(syntax(ln, &format!("expected vertex {}, found {id}", rotations.len())));
            }
            let mut color = Color::Plain;
            let mut slots = Vec::new();
            for tok in rest.split_whitespace() {
                match tok {
                    "#black" => color = Color::Black,
                    "#white" => color = Color::White,
                    "P1" => slots.push(Slot::Port(1)),
                    "P2" => slots.push(Slot::Port(2)),
                    "P3" => slots.push(Slot::Port(3)),
                    t => {
                        let v = t.parse().map_err(|_| syntax(ln, &format!("bad token `{t}`")))?;
                        slots.push(Slot::Vertex(v));
                    }
                }
            }
            rotations.push(slots);
            colors.push(color);
        }
        Ok(Self { kind, rungs, version, rotations, colors })
    }
}

impl fmt::Display for Transcription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gadget {} rungs={} version={}", self.kind, self.rungs, self.version)?;
        for (id, (rot, color)) in self.rotations.iter().zip(&self.colors).enumerate() {
            write!(f, "{id} :")?;
            for s in rot {
                match s {
                    Slot::Vertex(v) => write!(f, " {v}")?,
                    Slot::Port(p) => write!(f, " P{p}")?,
                }
            }
            match color {
                Color::Black => write!(f, " #black")?,
                Color::White => write!(f, " #white")?,
                Color::Plain => {}
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "gadget A rungs=2 version=1\n0 : P1 1 2\n1 : 2 3 P2\n";

    #[test]
    fn parse_and_print() {
        let t = Transcription::parse(SAMPLE).unwrap();
        assert_eq!(t.kind, TranscriptionKind::A);
        assert_eq!(t.rungs, 2);
        assert_eq!(t.rotations[0], vec![Slot::Port(1), Slot::Vertex(1), Slot::Vertex(2)]);
        assert_eq!(t.to_string(), SAMPLE);
    }

    #[test]
    fn colors_round_trip() {
        let text = "gadget H rungs=0 version=1\n0 : 1 2 #black\n1 : 0 2 #white\n2 : 0 1\n";
        let t = Transcription::parse(text).unwrap();
        assert_eq!(t.colors, vec![Color::Black, Color::White, Color::Plain]);
        assert_eq!(t.to_string(), text);
    }

    #[test]
    fn rejects_malformed() {
        assert!(Transcription::parse("").is_err());
        assert!(Transcription::parse("gadget Q rungs=0 version=1\n").is_err());
        assert!(Transcription::parse("gadget A rungs=0 version=2\n").is_err());
        assert!(Transcription::parse("gadget A rungs=0 version=1\n1 : 0\n").is_err());
        assert!(Transcription::parse("gadget A rungs=0 version=1\n0 : x\n").is_err());
    }
}
