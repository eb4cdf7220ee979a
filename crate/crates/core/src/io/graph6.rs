//! graph6: abstract graphs only. Reading yields graphs without embedding.

use super::FormatError;
use crate::graph::{Embedding, GraphBuilder, PlaneGraph, VertexId};

const HEADER: &[u8] = b">>graph6<<";
const MAX_VERTICES: usize = 258_047;

fn encode(g: &PlaneGraph) -> Result<Vec<u8>, FormatError> {
    let n = g.vertex_count();
    if g.is_multigraph() {
        return Err(FormatError::FormatLimit("graph6 cannot express parallel edges".into()));
    }
    if n > MAX_VERTICES {
        return Err(FormatError::FormatLimit(format!("{n} vertices exceed {MAX_VERTICES}")));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x = (x << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push(x + 63);
    }
    out.push(b'\n');
    Ok(out)
}

pub(super) fn write(graphs: &[PlaneGraph]) -> Result<Vec<u8>, FormatError> {
    let mut out = Vec::new();
    for g in graphs {
        out.extend(encode(g)?);
    }
    Ok(out)
}

fn decode(line: &[u8], index: usize) -> Result<PlaneGraph, FormatError> {
    let malformed = |msg: &str| FormatError::MalformedRecord { index, msg: msg.to_string() };
    if line.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(malformed("byte outside 63..=126"));
    }
    let vals: Vec<usize> = line.iter().map(|&c| (c - 63) as usize).collect();
    let (n, rest) = match vals.first() {
        None => return Err(FormatError::TruncatedRecord { index }),
        Some(63) => {
            if vals.len() < 4 {
                return Err(FormatError::TruncatedRecord { index });
            }
            if vals[1] == 63 {
                return Err(FormatError::FormatLimit("graphs above 258047 vertices".into()));
            }
            ((vals[1] << 12) | (vals[2] << 6) | vals[3], &vals[4..])
        }
        Some(&n) => (n, &vals[1..]),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() != pairs.div_ceil(6) {
        return Err(if rest.len() < pairs.div_ceil(6) {
            FormatError::TruncatedRecord { index }
        } else {
            malformed("trailing bytes")
        });
    }
    let bit = |k: usize| (rest[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut lists: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                lists[i].push(j);
                lists[j].push(i);
            }
            k += 1;
        }
    }
    GraphBuilder::new(lists)
        .embedding(Embedding::Absent)
        .allow_disconnected()
        .build()
        .map_err(|e| malformed(&e.to_string()))
}

pub(super) fn read(bytes: &[u8]) -> Result<Vec<PlaneGraph>, FormatError> {
    let body = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    body.split(|&c| c == b'\n')
        .map(|l| l.strip_suffix(b"\r").unwrap_or(l))
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| decode(l, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    // Reference strings from networkx.to_graph6_bytes.
    #[test]
    fn pinned_encodings() {
        assert_eq!(write(&[fixtures::k4()]).unwrap(), b"C~\n");
        assert_eq!(write(&[fixtures::triangular_prism()]).unwrap(), b"E{Sw\n");
    }

    #[test]
    fn read_has_no_embedding() {
        let g = &read(b"C~\n").unwrap()[0];
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_embedding());
        assert!(g.faces().is_err());
    }

    #[test]
    fn abstract_round_trip() {
        let g = PlaneGraph::from_rotation(&fixtures::prism_lists(40)).unwrap();
        let back = &read(&write(std::slice::from_ref(&g)).unwrap()).unwrap()[0];
        let edges = |h: &PlaneGraph| {
            let mut e: Vec<_> = h.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
            e.sort_unstable();
            e
        };
        assert_eq!(edges(back), edges(&g));
    }

    #[test]
    fn malformed() {
        assert_eq!(read(b"C").err(), Some(FormatError::TruncatedRecord { index: 0 }));
        assert!(matches!(read(b"C~~"), Err(FormatError::MalformedRecord { .. })));
        assert!(matches!(read(b"C\x01"), Err(FormatError::MalformedRecord { .. })));
    }
}
