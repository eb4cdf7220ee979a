//! Cycle spectra, girth and circumference.
//!
//! The engine enumerates each cycle once, from its minimum vertex `s`,
//! along paths that only visit vertices larger than `s`, and closes the
//! cycle only when its last vertex is larger than its second one. A path is
//! abandoned when its length plus the breadth-first distance back to `s`
//! exceeds the budget, or when every length it could still produce has
//! already been found. Roots are processed in parallel; since only the set
//! of lengths is collected, the result does not depend on scheduling.

use std::collections::{BTreeSet, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, PlaneGraph};

/// `cycles_up_to` refuses larger budgets unless forced.
pub const MAX_UNFORCED_BUDGET: usize = 24;
/// `full_spectrum` and `circumference` refuse larger graphs unless forced.
pub const MAX_UNFORCED_VERTICES: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("length budget {0} is too small")]
    BudgetTooSmall(usize),
    #[error("length budget {budget} exceeds {MAX_UNFORCED_BUDGET}; pass force to override")]
    BudgetTooLarge { budget: usize },
    #[error("graph has {vertices} vertices, above {MAX_UNFORCED_VERTICES}; pass force to override")]
    GraphTooLarge { vertices: usize },
    #[error("graph has no cycle")]
    Acyclic,
    #[error("cannot certify circumference at least {k}")]
    CircumferenceTooSmall { k: usize },
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("cycle enumeration works on simple graphs only")]
    MultigraphUnsupported,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Default)]
pub struct SpectrumOptions {
    /// Lift the size and budget limits.
    pub force: bool,
    /// Run on a dedicated pool with this many threads instead of the global one.
    pub threads: Option<usize>,
}

impl SpectrumOptions {
    pub fn forced() -> Self {
        Self { force: true, threads: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpectrum {
    pub lengths: BTreeSet<usize>,
    /// Present iff the spectrum is truncated at this length.
    pub budget: Option<usize>,
    pub complete: bool,
}

impl CycleSpectrum {
    pub fn contains(&self, len: usize) -> bool {
        self.lengths.contains(&len)
    }

    /// True if some length lies in `[lo, hi]`.
    pub fn meets(&self, lo: usize, hi: usize) -> bool {
        lo <= hi && self.lengths.range(lo..=hi).next().is_some()
    }

    pub fn min(&self) -> Option<usize> {
        self.lengths.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.lengths.last().copied()
    }

    /// The part of the spectrum at or below `limit`.
    pub fn truncated(&self, limit: usize) -> CycleSpectrum {
        CycleSpectrum { lengths: self.lengths.range(..=limit).copied().collect(), budget: Some(limit), complete: false }
    }
}

/// Maximal runs of missing lengths, plus the conjecture intervals they contain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub intervals: Vec<(usize, usize)>,
    /// Every `k` with `[k, 2k+2]` inside a gap and circumference at least `k`.
    pub merker_violations: Vec<usize>,
    pub spectrum: CycleSpectrum,
}

fn simple_adjacency(g: &PlaneGraph) -> Result<Vec<Vec<u32>>, SpectrumError> {
    if g.is_multigraph() {
        return Err(SpectrumError::MultigraphUnsupported);
    }
    Ok(g.simple_adjacency().into_iter().map(|ns| ns.into_iter().map(|v| v as u32).collect()).collect())
}

struct Shared {
    found: Vec<AtomicBool>,
    /// Largest length in `3..=budget` not yet found (0 once all are found).
    max_missing: AtomicUsize,
}

impl Shared {
    fn new(budget: usize) -> Self {
        Self { found: (0..=budget).map(|_| AtomicBool::new(false)).collect(), max_missing: AtomicUsize::new(budget) }
    }

    fn record(&self, len: usize) {
        if self.found[len].swap(true, Ordering::Relaxed) {
            return;
        }
        let budget = self.found.len() - 1;
        let missing = (3..=budget).rev().find(|&l| !self.found[l].load(Ordering::Relaxed)).unwrap_or(0);
        self.max_missing.fetch_min(missing, Ordering::Relaxed);
    }
}

struct RootSearch<'a> {
    adj: &'a [Vec<u32>],
    root: u32,
    first: u32,
    budget: usize,
    dist: Vec<u32>,
    on_path: Vec<bool>,
    shared: &'a Shared,
}

impl RootSearch<'_> {
    /// `v` ends a path from the root with `edges` edges.
    fn extend(&mut self, v: u32, edges: usize) {
        let cap = self.budget.min(self.shared.max_missing.load(Ordering::Relaxed));
        for &w in &self.adj[v as usize] {
            if w == self.root {
                // Closing edge; the first-vs-last test keeps one direction.
                if edges >= 2 && v > self.first {
                    self.shared.record(edges + 1);
                }
                continue;
            }
            if w < self.root || self.on_path[w as usize] {
                continue;
            }
            let d = self.dist[w as usize];
            if d == u32::MAX || edges + 1 + d as usize > cap {
                continue;
            }
            self.on_path[w as usize] = true;
            self.extend(w, edges + 1);
            self.on_path[w as usize] = false;
        }
    }
}

/// Distances from `root` inside the subgraph induced by vertices `>= root`.
fn distances_from(adj: &[Vec<u32>], root: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[root as usize] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if w > root && dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn search_root(adj: &[Vec<u32>], root: u32, budget: usize, shared: &Shared) {
    let dist = distances_from(adj, root);
    let mut search = RootSearch { adj, root, first: root, budget, dist, on_path: vec![false; adj.len()], shared };
    for &first in &adj[root as usize] {
        if first < root {
            continue;
        }
        search.first = first;
        search.on_path[first as usize] = true;
        search.extend(first, 1);
        search.on_path[first as usize] = false;
    }
}

fn enumerate(adj: &[Vec<u32>], budget: usize, threads: Option<usize>) -> BTreeSet<usize> {
    let shared = Shared::new(budget);
    let run = || {
        (0..adj.len() as u32).into_par_iter().for_each(|root| search_root(adj, root, budget, &shared));
    };
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build().expect("thread pool").install(run),
        None => run(),
    }
    (3..=budget).filter(|&l| shared.found[l].load(Ordering::Relaxed)).collect()
}

/// Every cycle length up to `budget`.
pub fn cycles_up_to(g: &PlaneGraph, budget: usize) -> Result<CycleSpectrum, SpectrumError> {
    cycles_up_to_with(g, budget, &SpectrumOptions::default())
}

pub fn cycles_up_to_with(
    g: &PlaneGraph,
    budget: usize,
    opts: &SpectrumOptions,
) -> Result<CycleSpectrum, SpectrumError> {
    if budget < 3 {
        return Err(SpectrumError::BudgetTooSmall(budget));
    }
    if budget > MAX_UNFORCED_BUDGET && !opts.force {
        return Err(SpectrumError::BudgetTooLarge { budget });
    }
    let adj = simple_adjacency(g)?;
    let lengths = enumerate(&adj, budget, opts.threads);
    Ok(CycleSpectrum { lengths, budget: Some(budget), complete: false })
}

pub fn full_spectrum(g: &PlaneGraph) -> Result<CycleSpectrum, SpectrumError> {
    full_spectrum_with(g, &SpectrumOptions::default())
}

pub fn full_spectrum_with(g: &PlaneGraph, opts: &SpectrumOptions) -> Result<CycleSpectrum, SpectrumError> {
    let n = g.vertex_count();
    if n > MAX_UNFORCED_VERTICES && !opts.force {
        return Err(SpectrumError::GraphTooLarge { vertices: n });
    }
    let adj = simple_adjacency(g)?;
    let lengths = if n < 3 { BTreeSet::new() } else { enumerate(&adj, n, opts.threads) };
    Ok(CycleSpectrum { lengths, budget: None, complete: true })
}

pub fn circumference(g: &PlaneGraph) -> Result<usize, SpectrumError> {
    circumference_with(g, &SpectrumOptions::default())
}

pub fn circumference_with(g: &PlaneGraph, opts: &SpectrumOptions) -> Result<usize, SpectrumError> {
    full_spectrum_with(g, opts)?.max().ok_or(SpectrumError::Acyclic)
}

/// Longest face whose boundary is a cycle; a lower bound on the circumference.
pub fn circumference_lower_bound(g: &PlaneGraph) -> Result<usize, SpectrumError> {
    let faces = g.faces()?;
    Ok(faces.iter().filter(|f| f.len() >= 3 && f.is_simple_cycle(g)).map(|f| f.len()).max().unwrap_or(0))
}

/// Shortest cycle length, by breadth-first search from every vertex.
pub fn girth(g: &PlaneGraph) -> Result<usize, SpectrumError> {
    let adj = simple_adjacency(g)?;
    let n = adj.len();
    let best = (0..n)
        .into_par_iter()
        .filter_map(|s| {
            let mut dist = vec![u32::MAX; n];
            let mut parent = vec![u32::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s as u32]);
            let mut best = usize::MAX;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v as usize] {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        parent[w as usize] = v;
                        queue.push_back(w);
                    } else if parent[v as usize] != w {
                        best = best.min((dist[v as usize] + dist[w as usize] + 1) as usize);
                    }
                }
            }
            (best != usize::MAX).then_some(best)
        })
        .min();
    best.ok_or(SpectrumError::Acyclic)
}

/// Certified lower bound on the circumference without exhaustive search.
fn certified_circumference_at_least(g: &PlaneGraph, k: usize) -> Result<bool, SpectrumError> {
    if g.has_embedding() && g.euler_planarity_check() && circumference_lower_bound(g)? >= k {
        return Ok(true);
    }
    if g.vertex_count() <= MAX_UNFORCED_VERTICES {
        return Ok(circumference(g).map(|c| c >= k).unwrap_or(false));
    }
    Ok(false)
}

/// Whether the cycle spectrum meets `[k, 2k + 2]`.
///
/// A `false` answer on a graph of circumference at least `k` is a
/// counterexample to the interval conjecture at `k`.
pub fn merker_interval_check(g: &PlaneGraph, k: usize) -> Result<bool, SpectrumError> {
    merker_interval_check_with(g, k, &SpectrumOptions::default())
}

pub fn merker_interval_check_with(g: &PlaneGraph, k: usize, opts: &SpectrumOptions) -> Result<bool, SpectrumError> {
    if k < 2 {
        return Err(SpectrumError::InvalidK(k));
    }
    let spectrum = cycles_up_to_with(g, 2 * k + 2, opts)?;
    if spectrum.meets(k, 2 * k + 2) {
        return Ok(true);
    }
    if !certified_circumference_at_least(g, k)? {
        return Err(SpectrumError::CircumferenceTooSmall { k });
    }
    Ok(false)
}

/// Spectrum gaps within `[girth, budget]`.
pub fn gap_scan(g: &PlaneGraph, budget: usize) -> Result<GapReport, SpectrumError> {
    gap_scan_with(g, budget, &SpectrumOptions::default())
}

pub fn gap_scan_with(g: &PlaneGraph, budget: usize, opts: &SpectrumOptions) -> Result<GapReport, SpectrumError> {
    let gth = girth(g)?;
    if budget < gth || budget < 3 {
        return Err(SpectrumError::BudgetTooSmall(budget));
    }
    let spectrum = cycles_up_to_with(g, budget, opts)?;
    let lengths: Vec<usize> = spectrum.lengths.iter().copied().collect();
    let mut intervals = Vec::new();
    let mut merker_violations = Vec::new();
    for w in lengths.windows(2) {
        let (a, b) = (w[0] + 1, w[1] - 1);
        if a > b {
            continue;
        }
        intervals.push((a, b));
        // The cycle of length w[1] certifies circumference >= k.
        let mut k = a.max(2);
        while 2 * k + 2 <= b {
            merker_violations.push(k);
            k += 1;
        }
    }
    Ok(GapReport { intervals, merker_violations, spectrum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn k4_spectrum() {
        let g = fixtures::k4();
        assert_eq!(cycles_up_to(&g, 3).unwrap().lengths, set(&[3]));
        assert_eq!(full_spectrum(&g).unwrap().lengths, set(&[3, 4]));
        assert_eq!(circumference(&g).unwrap(), 4);
        assert_eq!(girth(&g).unwrap(), 3);
        assert_eq!(circumference_lower_bound(&g).unwrap(), 3);
    }

    #[test]
    fn cube_spectrum() {
        let g = fixtures::cube();
        assert_eq!(cycles_up_to(&g, 5).unwrap().lengths, set(&[4]));
        assert_eq!(full_spectrum(&g).unwrap().lengths, set(&[4, 6, 8]));
        assert_eq!(girth(&g).unwrap(), 4);
        assert_eq!(circumference_lower_bound(&g).unwrap(), 4);
    }

    #[test]
    fn dodecahedron_is_hamiltonian() {
        let g = fixtures::dodecahedron();
        assert_eq!(circumference(&g).unwrap(), 20);
        assert_eq!(girth(&g).unwrap(), 5);
    }

    #[test]
    fn budget_policy() {
        let g = fixtures::cube();
        assert_eq!(cycles_up_to(&g, 2), Err(SpectrumError::BudgetTooSmall(2)));
        assert_eq!(cycles_up_to(&g, 25), Err(SpectrumError::BudgetTooLarge { budget: 25 }));
        assert!(cycles_up_to_with(&g, 25, &SpectrumOptions::forced()).is_ok());
        let big = fixtures::prism(21);
        assert_eq!(full_spectrum(&big), Err(SpectrumError::GraphTooLarge { vertices: 42 }));
    }

    #[test]
    fn merker_checks() {
        assert!(merker_interval_check(&fixtures::k4(), 2).unwrap());
        assert!(merker_interval_check(&fixtures::cube(), 4).unwrap());
        assert_eq!(merker_interval_check(&fixtures::k4(), 1), Err(SpectrumError::InvalidK(1)));
    }

    #[test]
    fn gap_scans() {
        let cube = gap_scan(&fixtures::cube(), 8).unwrap();
        assert_eq!(cube.intervals, vec![(5, 5), (7, 7)]);
        assert!(cube.merker_violations.is_empty());
        let k4 = gap_scan(&fixtures::k4(), 4).unwrap();
        assert!(k4.intervals.is_empty());
        assert_eq!(gap_scan(&fixtures::cube(), 3).unwrap_err(), SpectrumError::BudgetTooSmall(3));
    }

    #[test]
    fn acyclic_graph() {
        let path = PlaneGraph::from_rotation(&[vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(girth(&path), Err(SpectrumError::Acyclic));
        assert_eq!(circumference(&path), Err(SpectrumError::Acyclic));
    }
}
