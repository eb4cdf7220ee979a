//! planar_code: `>>planar_code<<`, then per graph the vertex count followed
//! by each vertex's counterclockwise neighbors (1-based), each list ending
//! in 0. Graphs with more than 255 vertices use the wide form: a 0 byte,
//! then every entry (count included) as a little-endian `u16`.

use super::FormatError;
use crate::graph::{GraphBuilder, PlaneGraph, VertexId};

pub const HEADER: &[u8] = b">>planar_code<<";
const HEADER_LE: &[u8] = b">>planar_code le<<";
const HEADER_BE: &[u8] = b">>planar_code be<<";

pub(super) fn write(graphs: &[PlaneGraph]) -> Result<Vec<u8>, FormatError> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        let n = g.vertex_count();
        if g.is_multigraph() {
            return Err(FormatError::FormatLimit("planar_code cannot express parallel edges here".into()));
        }
        if !g.has_embedding() {
            return Err(FormatError::FormatLimit("graph carries no embedding".into()));
        }
        if n > u16::MAX as usize {
            return Err(FormatError::FormatLimit(format!("{n} vertices exceed 65535")));
        }
        let wide = n > 255;
        let put = |x: usize, out: &mut Vec<u8>| {
            if wide {
                out.extend_from_slice(&(x as u16).to_le_bytes());
            } else {
                out.push(x as u8);
            }
        };
        if wide {
            out.push(0);
        }
        put(n, &mut out);
        for v in 0..n {
            for w in g.neighbors(v) {
                put(w + 1, &mut out);
            }
            put(0, &mut out);
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    big_endian: bool,
}

impl Cursor<'_> {
    fn byte(&mut self) -> Option<usize> {
        let b = *self.bytes.get(self.pos)?;
        self.pos += 1;
        Some(b as usize)
    }

    fn word(&mut self) -> Option<usize> {
        let b = self.bytes.get(self.pos..self.pos + 2)?;
        self.pos += 2;
        let arr = [b[0], b[1]];
        Some(if self.big_endian { u16::from_be_bytes(arr) } else { u16::from_le_bytes(arr) } as usize)
    }
}

pub(super) fn read(bytes: &[u8]) -> Result<Vec<PlaneGraph>, FormatError> {
    let (start, big_endian) = if bytes.starts_with(HEADER) {
        (HEADER.len(), false)
    } else if bytes.starts_with(HEADER_LE) {
        (HEADER_LE.len(), false)
    } else if bytes.starts_with(HEADER_BE) {
        (HEADER_BE.len(), true)
    } else {
        return Err(FormatError::MalformedHeader);
    };
    let mut cur = Cursor { bytes, pos: start, big_endian };
    let mut graphs = Vec::new();
    while cur.pos < bytes.len() {
        let index = graphs.len();
        let truncated = FormatError::TruncatedRecord { index };
        let mut n = cur.byte().ok_or(truncated.clone())?;
        let wide = n == 0;
        if wide {
            n = cur.word().ok_or(truncated.clone())?;
        }
        let next = |cur: &mut Cursor| if wide { cur.word() } else { cur.byte() };
        let mut lists: Vec<Vec<VertexId>> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                match next(&mut cur).ok_or(truncated.clone())? {
                    0 => break,
                    w if w > n => {
                        return Err(FormatError::MalformedRecord { index, msg: format!("neighbor {w} out of range") })
                    }
                    w => list.push(w - 1),
                }
            }
            lists.push(list);
        }
        let g =
            GraphBuilder::new(lists).build().map_err(|e| FormatError::MalformedRecord { index, msg: e.to_string() })?;
        if !g.euler_planarity_check() {
            return Err(FormatError::NonPlanarEmbedding { index });
        }
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_bytes() {
        let bytes = write(&[fixtures::k4()]).unwrap();
        assert_eq!(&bytes[..HEADER.len()], HEADER);
        let body = &bytes[HEADER.len()..];
        assert_eq!(body.len(), 1 + 4 * 4);
        assert_eq!(body, &[4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]);
        assert_eq!(read(&bytes).unwrap()[0].rotation_lists(), fixtures::k4().rotation_lists());
    }

    #[test]
    fn truncated_record() {
        let bytes = write(&[fixtures::k4()]).unwrap();
        let cut = &bytes[..bytes.len() - 3];
        assert_eq!(read(cut).err(), Some(FormatError::TruncatedRecord { index: 0 }));
    }

    #[test]
    fn swapped_rotation_is_non_planar() {
        let mut bytes = write(&[fixtures::k4()]).unwrap();
        // The first list (2 3 4) becomes (2 4 3).
        let at = HEADER.len() + 2;
        bytes.swap(at, at + 1);
        assert_eq!(read(&bytes).err(), Some(FormatError::NonPlanarEmbedding { index: 0 }));
    }

    #[test]
    fn bad_header() {
        assert_eq!(read(b">>graph6<<").err(), Some(FormatError::MalformedHeader));
        assert_eq!(read(b"").err(), Some(FormatError::MalformedHeader));
    }

    #[test]
    fn wide_records() {
        let g = PlaneGraph::from_rotation(&fixtures::prism_lists(150)).unwrap();
        let bytes = write(std::slice::from_ref(&g)).unwrap();
        assert_eq!(bytes[HEADER.len()], 0);
        assert_eq!(&bytes[HEADER.len() + 1..HEADER.len() + 3], &300u16.to_le_bytes());
        assert_eq!(read(&bytes).unwrap()[0].rotation_lists(), g.rotation_lists());
    }

    #[test]
    fn several_graphs() {
        let gs: Vec<_> = fixtures::named().into_iter().map(|(_, g)| g).collect();
        let back = read(&write(&gs).unwrap()).unwrap();
        assert_eq!(back.len(), gs.len());
    }
}
