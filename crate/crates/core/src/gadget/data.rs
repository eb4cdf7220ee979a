//! Shipped transcriptions of the gadgets and the base graph.
//!
//! The files under `data/` are the reviewable source: `A_<s>.gadget`,
//! `B_<r>.gadget` and `H_<t>.gadget`. Parameters past the shipped range
//! are produced by the generators below, which extend the ladders one rung
//! (or the cylinder one unit) at a time; a test checks that the generators
//! reproduce every shipped file byte for byte.

use std::path::Path;

use super::transcription::{Slot, Transcription, TranscriptionKind, FORMAT_VERSION};
use super::GadgetError;
use crate::fixtures::tube_lists;
use crate::graph::{Color, VertexId};

/// Columns per periodic unit of the base graph.
pub const UNIT_COLUMNS: usize = 3;
/// Zigzag rings of the base graph between its two boundary cycles.
pub const RINGS: usize = 3;

macro_rules! shipped {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../data/", $name, ".gadget")))),*]
    };
}

static SHIPPED: &[(&str, &str)] = shipped!(
    "A_2", "A_3", "A_4", "A_5", "A_6", "A_7", "A_8", "B_0", "B_1", "B_2", "B_3", "B_4", "B_5", "B_6", "H_1", "H_2",
    "H_3", "H_4", "H_5", "H_6",
);

pub fn file_stem(kind: TranscriptionKind, param: usize) -> String {
    format!("{kind}_{param}")
}

/// Names of all shipped files, without extension.
pub fn shipped_stems() -> impl Iterator<Item = &'static str> {
    SHIPPED.iter().map(|(n, _)| *n)
}

pub fn shipped_text(kind: TranscriptionKind, param: usize) -> Option<&'static str> {
    let stem = file_stem(kind, param);
    SHIPPED.iter().find(|(n, _)| *n == stem).map(|(_, t)| *t)
}

/// The shipped transcription if there is one, else the generated one.
pub fn transcription(kind: TranscriptionKind, param: usize) -> Result<Transcription, GadgetError> {
    match shipped_text(kind, param) {
        Some(text) => Ok(Transcription::parse(text)?),
        None => generate(kind, param),
    }
}

/// Reads `<dir>/<kind>_<param>.gadget`.
pub fn load_from_dir(dir: &Path, kind: TranscriptionKind, param: usize) -> Result<Transcription, GadgetError> {
    let path = dir.join(format!("{}.gadget", file_stem(kind, param)));
    let text = std::fs::read_to_string(&path)
        .map_err(|e| GadgetError::DataFile { path: path.display().to_string(), msg: e.to_string() })?;
    Ok(Transcription::parse(&text)?)
}

pub fn generate(kind: TranscriptionKind, param: usize) -> Result<Transcription, GadgetError> {
    match kind {
        TranscriptionKind::A if param < 2 => Err(GadgetError::InvalidParams(format!("A_s needs s >= 2, got {param}"))),
        TranscriptionKind::A => Ok(transcription_a(param)),
        TranscriptionKind::B => Ok(transcription_b(param)),
        TranscriptionKind::H if param == 0 => Err(GadgetError::InvalidParams("H needs t >= 1".into())),
        TranscriptionKind::H => Ok(transcription_h(param)),
    }
}

fn vertex_slots(ids: &[VertexId]) -> Vec<Slot> {
    ids.iter().map(|&v| Slot::Vertex(v)).collect()
}

/// Transcription of `A_s`: apex `0`, left rail `u_i = 2i - 1`, right rail `w_i = 2i`.
pub fn transcription_a(s: usize) -> Transcription {
    assert!(s >= 2, "A gadgets need at least 2 rungs");
    let u = |i: usize| 2 * i - 1;
    let w = |i: usize| 2 * i;
    let mut rot = vec![Vec::new(); 2 * s + 1];
    rot[0] = vec![Slot::Port(1), Slot::Vertex(u(s)), Slot::Vertex(w(s))];
    for i in 1..=s {
        let up_u = if i == s { 0 } else { u(i + 1) };
        let up_w = if i == s { 0 } else { w(i + 1) };
        rot[u(i)] = if i == s {
            vertex_slots(&[w(i), up_u, u(i - 1)])
        } else if i == 1 {
            vec![Slot::Vertex(w(1)), Slot::Vertex(up_u), Slot::Port(2)]
        } else {
            vertex_slots(&[w(i), up_u, u(i - 1)])
        };
        rot[w(i)] = if i == 1 {
            vec![Slot::Vertex(up_w), Slot::Vertex(u(1)), Slot::Port(3)]
        } else {
            vertex_slots(&[up_w, u(i), w(i - 1)])
        };
    }
    Transcription {
        kind: TranscriptionKind::A,
        rungs: s,
        version: FORMAT_VERSION,
        colors: vec![Color::Plain; rot.len()],
        rotations: rot,
    }
}

/// Transcription of `B_r`: bottom port vertex `0`, left rail `1..=r+1`
/// (ending at port 3), right rail `r+2..=2r+2`, cap vertex `2r+3`, and the
/// port-2 vertex `2r+4`.
pub fn transcription_b(r: usize) -> Transcription {
    let left = |j: usize| j; // j = 0 is the bottom vertex, j = r + 1 carries port 3
    let right = |j: usize| if j == 0 { 0 } else { r + 1 + j };
    let cap = 2 * r + 3;
    let top = 2 * r + 4;
    let mut rot = vec![Vec::new(); 2 * r + 5];
    rot[0] = vec![Slot::Port(1), Slot::Vertex(right(1)), Slot::Vertex(left(1))];
    for j in 1..=r {
        rot[left(j)] = vertex_slots(&[right(j), left(j + 1), left(j - 1)]);
        rot[right(j)] = vertex_slots(&[right(j + 1), left(j), right(j - 1)]);
    }
    rot[left(r + 1)] = vec![Slot::Vertex(cap), Slot::Port(3), Slot::Vertex(left(r))];
    rot[right(r + 1)] = vertex_slots(&[top, cap, right(r)]);
    rot[cap] = vertex_slots(&[top, left(r + 1), right(r + 1)]);
    rot[top] = vec![Slot::Port(2), Slot::Vertex(cap), Slot::Vertex(right(r + 1))];
    Transcription {
        kind: TranscriptionKind::B,
        rungs: r,
        version: FORMAT_VERSION,
        colors: vec![Color::Plain; rot.len()],
        rotations: rot,
    }
}

/// Transcription of the base graph with `t` periodic units.
///
/// Each unit is three columns of the cylinder built by `tube_lists` with
/// `RINGS` rings. The header's `rungs` field holds `t` for this kind.
/// Every rotation list starts with the neighbor that receives port 1.
pub fn transcription_h(t: usize) -> Transcription {
    assert!(t >= 1);
    let lists = tube_lists(UNIT_COLUMNS * t, RINGS);
    let per = 2 * RINGS + 2;
    Transcription {
        kind: TranscriptionKind::H,
        rungs: t,
        version: FORMAT_VERSION,
        colors: (0..lists.len()).map(|v| column_color(v % per)).collect(),
        rotations: lists.into_iter().map(|l| vertex_slots(&l)).collect(),
    }
}

/// Color by position within a column: outer, `U1 D1 U2 D2 U3 D3`, inner.
fn column_color(pos: usize) -> Color {
    match pos {
        2 | 5 => Color::White,
        _ => Color::Black,
    }
}
