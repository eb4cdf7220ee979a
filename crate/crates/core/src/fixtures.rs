//! Named plane graphs and a seeded generator of 3-connected cubic plane graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{GraphBuilder, PlaneGraph, VertexId};

fn build(lists: Vec<Vec<VertexId>>) -> PlaneGraph {
    GraphBuilder::new(lists).build().expect("fixture rotation is valid")
}

/// K4 with rotations 0:(1,2,3) 1:(0,3,2) 2:(0,1,3) 3:(0,2,1).
pub fn k4() -> PlaneGraph {
    build(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
}

/// K4 with the rotation at vertex 0 reflected; a non-planar embedding.
pub fn k4_perturbed_lists() -> Vec<Vec<VertexId>> {
    vec![vec![1, 3, 2], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]
}

/// K4 with the edge 0-1 subdivided by a new vertex 4.
pub fn k4_subdivided() -> PlaneGraph {
    build(subdivide(&k4().rotation_lists(), 0, 1))
}

pub fn two_triangles_lists() -> Vec<Vec<VertexId>> {
    vec![vec![1, 2], vec![2, 0], vec![0, 1], vec![4, 5], vec![5, 3], vec![3, 4]]
}

/// Prism over an `n`-gon: outer vertices `0..n`, inner vertices `n..2n`.
pub fn prism_lists(n: usize) -> Vec<Vec<VertexId>> {
    let mut lists = vec![Vec::new(); 2 * n];
    for i in 0..n {
        let (next, prev) = ((i + 1) % n, (i + n - 1) % n);
        lists[i] = vec![n + i, prev, next];
        lists[n + i] = vec![i, n + next, n + prev];
    }
    lists
}

pub fn prism(n: usize) -> PlaneGraph {
    build(prism_lists(n))
}

pub fn triangular_prism() -> PlaneGraph {
    prism(3)
}

pub fn cube() -> PlaneGraph {
    prism(4)
}

/// Triangular prism with the rung 0-3 replaced by the path 0-6-7-3.
pub fn prism_with_long_rung() -> PlaneGraph {
    let lists = subdivide(&prism_lists(3), 0, 3);
    build(subdivide(&lists, 6, 3))
}

/// Cylinder of `rings` zigzag rings between two `n`-cycles.
///
/// Column `i` holds, in order: the outer cycle vertex, then `U`/`D` for
/// each ring, then the inner cycle vertex. `U` vertices have an edge toward
/// the outer cycle, `D` vertices toward the inner one. Every face other
/// than the two `n`-gons is a pentagon (next to an `n`-gon) or a hexagon.
/// Each rotation list starts with the vertex's radial neighbor.
pub fn tube_lists(n: usize, rings: usize) -> Vec<Vec<VertexId>> {
    assert!(n >= 3 && rings >= 1);
    let per = 2 * rings + 2;
    let outer = |i: usize| (i % n) * per;
    let up = |j: usize, i: usize| (i % n) * per + 1 + 2 * (j - 1);
    let down = |j: usize, i: usize| (i % n) * per + 2 + 2 * (j - 1);
    let inner = |i: usize| (i % n) * per + per - 1;
    let mut lists = vec![Vec::new(); n * per];
    for i in 0..n {
        let prev = i + n - 1;
        lists[outer(i)] = vec![up(1, i), outer(prev), outer(i + 1)];
        for j in 1..=rings {
            let radial_up = if j == 1 { outer(i) } else { down(j - 1, i) };
            lists[up(j, i)] = vec![radial_up, down(j, i), down(j, prev)];
            let radial_down = if j == rings { inner(i) } else { up(j + 1, i) };
            lists[down(j, i)] = vec![radial_down, up(j, i), up(j, i + 1)];
        }
        lists[inner(i)] = vec![down(rings, i), inner(i + 1), inner(prev)];
    }
    lists
}

pub fn dodecahedron() -> PlaneGraph {
    build(tube_lists(5, 1))
}

/// Replaces the edge `u`-`v` by the path `u`-`w`-`v` with a new vertex `w`.
pub fn subdivide(lists: &[Vec<VertexId>], u: VertexId, v: VertexId) -> Vec<Vec<VertexId>> {
    let w = lists.len();
    let mut out = lists.to_vec();
    for (a, b) in [(u, v), (v, u)] {
        let pos = out[a].iter().position(|&x| x == b).expect("edge exists");
        out[a][pos] = w;
    }
    out.push(vec![u, v]);
    out
}

/// Truncation: every vertex becomes a triangle, one corner per incident dart.
pub fn truncate(g: &PlaneGraph) -> PlaneGraph {
    let corner = |d: crate::graph::Dart| d.index();
    let mut lists = vec![Vec::new(); g.dart_count()];
    for v in 0..g.vertex_count() {
        let rot = g.rotation(v);
        let k = rot.len();
        for (i, &d) in rot.iter().enumerate() {
            let succ = rot[(i + 1) % k];
            let pred = rot[(i + k - 1) % k];
            lists[corner(d)] = vec![corner(d.twin()), corner(succ), corner(pred)];
        }
    }
    build(lists)
}

/// Inserts an edge between the midpoints of two distinct edges bounding a
/// common face. Starting from K4 this reaches every 3-connected cubic plane graph.
fn insert_edge(lists: &[Vec<VertexId>], rng: &mut ChaCha8Rng) -> Vec<Vec<VertexId>> {
    let g = build(lists.to_vec());
    let faces = g.faces().expect("embedded");
    loop {
        let face = faces.choose(rng).expect("faces exist");
        let i = rng.gen_range(0..face.len());
        let j = rng.gen_range(0..face.len());
        let (d1, d2) = (face.darts[i], face.darts[j]);
        if d1.edge() == d2.edge() {
            continue;
        }
        let (x1, y1) = (g.origin(d1), g.head(d1));
        let (x2, y2) = (g.origin(d2), g.head(d2));
        let base = subdivide(lists, x1, y1);
        let m1 = base.len() - 1;
        let base = subdivide(&base, x2, y2);
        let m2 = base.len() - 1;
        for pos1 in [0, 1] {
            for pos2 in [0, 1] {
                let mut cand = base.clone();
                cand[m1].insert(pos1, m2);
                cand[m2].insert(pos2, m1);
                if let Ok(h) = GraphBuilder::new(cand.clone()).build() {
                    if h.euler_planarity_check() {
                        return cand;
                    }
                }
            }
        }
    }
}

/// A random 3-connected cubic plane graph on `vertices` vertices (even, ≥ 4).
pub fn random_polyhedron(vertices: usize, rng: &mut ChaCha8Rng) -> PlaneGraph {
    assert!(vertices >= 4 && vertices.is_multiple_of(2));
    let mut lists = k4().rotation_lists();
    while lists.len() < vertices {
        lists = insert_edge(&lists, rng);
    }
    build(lists)
}

/// Seeded corpus of `count` cubic polyhedra with 6 to 30 vertices.
pub fn random_corpus(seed: u64, count: usize) -> Vec<PlaneGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| random_polyhedron(6 + 2 * (i % 13), &mut rng)).collect()
}

/// The small named fixtures: K4, triangular prism, cube, dodecahedron.
pub fn named() -> Vec<(&'static str, PlaneGraph)> {
    vec![("k4", k4()), ("prism", triangular_prism()), ("cube", cube()), ("dodecahedron", dodecahedron())]
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<VertexId> {
    let mut p: Vec<VertexId> = (0..n).collect();
    p.shuffle(rng);
    p
}
