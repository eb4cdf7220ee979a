#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use cyclegap::fixtures;
use cyclegap::io::{read, write_all, FormatTag};
use cyclegap::PlaneGraph;

pub const CORPUS_SEED: u64 = 0x5eed_c0de;
pub const CORPUS_RANDOM: usize = 120;

pub fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus.pc")
}

/// The named fixtures followed by the seeded random polyhedra.
pub fn generate_corpus() -> Vec<PlaneGraph> {
    let mut out: Vec<PlaneGraph> = fixtures::named().into_iter().map(|(_, g)| g).collect();
    out.extend(fixtures::random_corpus(CORPUS_SEED, CORPUS_RANDOM));
    out
}

pub fn corpus_bytes() -> Vec<u8> {
    write_all(&generate_corpus(), FormatTag::PlanarCode).unwrap()
}

pub fn load_corpus() -> Vec<PlaneGraph> {
    let bytes = std::fs::read(corpus_path()).expect("corpus file present");
    read(&bytes, FormatTag::PlanarCode).expect("corpus parses")
}

/// Cycle lengths by dynamic programming over vertex subsets.
///
/// `reach[S][v]` says some path starts at the smallest vertex of `S`, visits
/// exactly `S` and ends at `v`. A cycle of length `|S|` exists when such a
/// path ends next to its start.
pub fn subset_spectrum(g: &PlaneGraph) -> BTreeSet<usize> {
    let n = g.vertex_count();
    assert!(n <= 16, "subset oracle is exponential");
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = 1usize << n;
    let mut reach = vec![0u32; full];
    let mut lengths = BTreeSet::new();
    for s in 0..n {
        reach[1 << s] = 1 << s;
    }
    for set in 1..full {
        let ends = reach[set];
        if ends == 0 {
            continue;
        }
        let s = set.trailing_zeros() as usize;
        let size = set.count_ones() as usize;
        for (v, &nbrs) in adj.iter().enumerate() {
            if ends & (1 << v) == 0 {
                continue;
            }
            if size >= 3 && nbrs & (1 << s) != 0 {
                lengths.insert(size);
            }
            let mut next = nbrs & !(set as u32);
            // Only vertices above the start keep `s` the minimum.
            next &= !((1u32 << s) - 1) & !(1 << s);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[set | (1 << w)] |= 1 << w;
            }
        }
    }
    lengths
}
