//! Unlabeled membership: is there a grid labeling under which a graph is a
//! spanning cross-like subgraph of `K_p ⊗ K_q`?
//!
//! The search assigns vertices `0, 1, 2, …` to cells in increasing cell
//! order, so the first complete assignment found is the lexicographically
//! smallest valid labeling. Three things keep it small:
//!
//! * row and column indices are introduced in order of first use, since
//!   permuting grid rows or columns preserves membership;
//! * of two twin vertices (equal neighbourhoods apart from each other) the
//!   smaller one gets the smaller cell, since swapping twins is an
//!   automorphism;
//! * after each placement every unplaced vertex gets the set of free cells
//!   still consistent with the partial labeling, and a perfect matching
//!   between unplaced vertices and free cells must exist.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::certificate::{Certificate, Reason, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{GridLabeling, GridShape};
use crate::membership::elementary_decomposition_labeled;

/// Largest order the search handles (vertex sets are `u128` masks).
pub const MAX_SEARCH_ORDER: usize = 128;

/// Orders up to which answers are expected at interactive speed.
pub const DESK_SCALE_ORDER: usize = 16;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prefilter {
    Pass,
    Fail(Reason),
}

/// Cheap necessary conditions for membership under some labeling.
///
/// Fails on an odd edge count, on more edges than `K_p ⊗ K_q` has, and when
/// the vertices cannot be split into `p` independent `q`-sets (grid rows)
/// or into `q` independent `p`-sets (grid columns).
pub fn prefilter(k: &Graph, shape: GridShape) -> Prefilter {
    let m = k.edge_count();
    if m % 2 == 1 {
        return Prefilter::Fail(Reason::OddEdgeCount);
    }
    if m > shape.edge_bound() {
        return Prefilter::Fail(Reason::EdgeBoundExceeded);
    }
    if k.vertex_count() != shape.vertex_count() {
        return Prefilter::Fail(Reason::NoIndependentPartition);
    }
    if k.vertex_count() <= MAX_SEARCH_ORDER {
        let adj = adjacency_masks(k);
        if !has_independent_partition(&adj, shape.q()) || !has_independent_partition(&adj, shape.p()) {
            return Prefilter::Fail(Reason::NoIndependentPartition);
        }
    }
    Prefilter::Pass
}

fn adjacency_masks(k: &Graph) -> Vec<u128> {
    (0..k.vertex_count())
        .map(|u| k.neighbors(u).fold(0u128, |m, v| m | 1 << v))
        .collect()
}

/// Whether all vertices split into independent sets of exactly `size`.
fn has_independent_partition(adj: &[u128], size: usize) -> bool {
    let n = adj.len();
    if size == 0 || !n.is_multiple_of(size) {
        return false;
    }
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut dead = HashSet::new();
    partition_rec(adj, size, all, &mut dead)
}

fn partition_rec(adj: &[u128], size: usize, remaining: u128, dead: &mut HashSet<u128>) -> bool {
    if remaining == 0 {
        return true;
    }
    if dead.contains(&remaining) {
        return false;
    }
    let anchor = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << anchor);
    let found = grow_set(adj, size, size - 1, rest & !adj[anchor], rest, dead);
    if !found {
        dead.insert(remaining);
    }
    found
}

/// Picks `need` more members from `candidates` (ascending), then recurses on
/// what is left of `rest`.
fn grow_set(adj: &[u128], size: usize, need: usize, candidates: u128, rest: u128, dead: &mut HashSet<u128>) -> bool {
    if need == 0 {
        return partition_rec(adj, size, rest, dead);
    }
    let mut cands = candidates;
    while cands.count_ones() as usize >= need {
        let v = cands.trailing_zeros() as usize;
        cands &= !(1 << v);
        if grow_set(adj, size, need - 1, cands & !adj[v], rest & !(1 << v), dead) {
            return true;
        }
    }
    false
}

/// Knobs for [`recognize_with`].
#[derive(Debug, Clone, Copy)]
pub struct RecognizeOptions<'a> {
    /// Run [`prefilter`] before searching.
    pub prefilter: bool,
    /// Checked at every search node; when set the search returns [`Error::Cancelled`].
    pub cancel: Option<&'a AtomicBool>,
}

impl Default for RecognizeOptions<'_> {
    fn default() -> Self {
        Self {
            prefilter: true,
            cancel: None,
        }
    }
}

/// Decides membership of `k` in `K(p, q)` over all labelings.
///
/// A member certificate carries the lexicographically smallest valid
/// labeling (compared as the sequence of row-major cell indices of vertices
/// `0, 1, …`) and its elementary decomposition.
pub fn recognize(k: &Graph, shape: GridShape) -> Result<Certificate> {
    recognize_with(k, shape, RecognizeOptions::default())
}

pub fn recognize_with(k: &Graph, shape: GridShape, opts: RecognizeOptions<'_>) -> Result<Certificate> {
    shape.check_order(k)?;
    if k.vertex_count() > MAX_SEARCH_ORDER {
        return Err(Error::ScaleExceeded(format!(
            "recognition supports at most {MAX_SEARCH_ORDER} vertices"
        )));
    }
    if opts.prefilter {
        if let Prefilter::Fail(reason) = prefilter(k, shape) {
            return Ok(Certificate::non_member(k, shape, None, Witness::reason(reason)));
        }
    }
    let mut found = None;
    Search::new(k, shape, opts.cancel).run(&mut |labeling| {
        found = Some(labeling.clone());
        ControlFlow::Break(())
    })?;
    match found {
        Some(labeling) => {
            let summands = elementary_decomposition_labeled(k, &labeling)?;
            Ok(Certificate::member(k, labeling, summands))
        }
        None => Ok(Certificate::non_member(k, shape, None, Witness::reason(Reason::SearchExhausted))),
    }
}

/// Calls `visit` for valid labelings in lexicographic order, stopping when
/// it breaks.
///
/// Only labelings with rows and columns numbered in order of first use and
/// with twins in increasing cell order are visited. Every arrangement of `k`
/// on the grid, up to reordering rows and columns, still appears at least
/// once.
pub fn for_each_labeling(
    k: &Graph,
    shape: GridShape,
    cancel: Option<&AtomicBool>,
    visit: &mut dyn FnMut(&GridLabeling) -> ControlFlow<()>,
) -> Result<()> {
    shape.check_order(k)?;
    if k.vertex_count() > MAX_SEARCH_ORDER {
        return Err(Error::ScaleExceeded(format!(
            "recognition supports at most {MAX_SEARCH_ORDER} vertices"
        )));
    }
    Search::new(k, shape, cancel).run(visit)
}

struct Search<'a> {
    shape: GridShape,
    n: usize,
    adj: Vec<u128>,
    /// Largest smaller twin of each vertex.
    twin_prev: Vec<Option<usize>>,
    cell_of: Vec<usize>,
    occ: Vec<usize>,
    rows_used: usize,
    cols_used: usize,
    cancel: Option<&'a AtomicBool>,
}

impl<'a> Search<'a> {
    fn new(k: &Graph, shape: GridShape, cancel: Option<&'a AtomicBool>) -> Self {
        let n = k.vertex_count();
        let adj = adjacency_masks(k);
        let twin_prev = (0..n)
            .map(|v| {
                (0..v).rev().find(|&u| {
                    adj[u] & !(1u128 << v) == adj[v] & !(1u128 << u)
                })
            })
            .collect();
        Self {
            shape,
            n,
            adj,
            twin_prev,
            cell_of: vec![NONE; n],
            occ: vec![NONE; n],
            rows_used: 0,
            cols_used: 0,
            cancel,
        }
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    fn run(&mut self, visit: &mut dyn FnMut(&GridLabeling) -> ControlFlow<()>) -> Result<()> {
        if self.n == 0 {
            return Ok(());
        }
        self.dfs(0, visit).map(|_| ())
    }

    /// Whether `w` can sit at `cell` given the vertices placed so far.
    fn consistent(&self, w: usize, cell: usize, placed: usize) -> bool {
        let q = self.shape.q();
        let (r, c) = (cell / q, cell % q);
        for u in 0..placed {
            let (r2, c2) = (self.cell_of[u] / q, self.cell_of[u] % q);
            let wu = self.adjacent(w, u);
            if r2 == r || c2 == c {
                if wu {
                    return false;
                }
                continue;
            }
            let x = self.occ[r * q + c2];
            let y = self.occ[r2 * q + c];
            if x != NONE && y != NONE && wu != self.adjacent(x, y) {
                return false;
            }
        }
        true
    }

    /// Every unplaced vertex can still be matched to a distinct free cell.
    fn completable(&self, placed: usize) -> bool {
        let free: Vec<usize> = (0..self.n).filter(|&c| self.occ[c] == NONE).collect();
        let mut domains = Vec::with_capacity(self.n - placed);
        let mut covered = 0u128;
        for w in placed..self.n {
            let mut dom = 0u128;
            for (slot, &cell) in free.iter().enumerate() {
                if self.consistent(w, cell, placed) {
                    dom |= 1 << slot;
                }
            }
            if dom == 0 {
                return false;
            }
            covered |= dom;
            domains.push(dom);
        }
        if covered.count_ones() as usize != free.len() {
            return false;
        }
        perfect_matching(&domains, free.len())
    }

    fn dfs(&mut self, v: usize, visit: &mut dyn FnMut(&GridLabeling) -> ControlFlow<()>) -> Result<ControlFlow<()>> {
        if self.cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
            return Err(Error::Cancelled);
        }
        if v == self.n {
            let q = self.shape.q();
            let cells = self.cell_of.iter().map(|&c| (c / q, c % q)).collect();
            let labeling = GridLabeling::new(self.shape, cells).expect("search yields a bijection");
            return Ok(visit(&labeling));
        }
        let (p, q) = (self.shape.p(), self.shape.q());
        let floor = self.twin_prev[v].map_or(0, |u| self.cell_of[u] + 1);
        for cell in floor..self.n {
            let (r, c) = (cell / q, cell % q);
            if r > self.rows_used || r >= p {
                break;
            }
            if c > self.cols_used || self.occ[cell] != NONE || !self.consistent(v, cell, v) {
                continue;
            }
            let saved = (self.rows_used, self.cols_used);
            self.cell_of[v] = cell;
            self.occ[cell] = v;
            self.rows_used = self.rows_used.max(r + 1);
            self.cols_used = self.cols_used.max(c + 1);
            let flow = if self.completable(v + 1) {
                self.dfs(v + 1, visit)?
            } else {
                ControlFlow::Continue(())
            };
            self.occ[cell] = NONE;
            self.cell_of[v] = NONE;
            (self.rows_used, self.cols_used) = saved;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Kuhn's augmenting paths; `domains[i]` is the mask of slots open to item `i`.
fn perfect_matching(domains: &[u128], slots: usize) -> bool {
    let mut owner = vec![NONE; slots];
    for item in 0..domains.len() {
        let mut visited = 0u128;
        if !augment(item, domains, &mut owner, &mut visited) {
            return false;
        }
    }
    true
}

fn augment(item: usize, domains: &[u128], owner: &mut [usize], visited: &mut u128) -> bool {
    let mut dom = domains[item] & !*visited;
    while dom != 0 {
        let slot = dom.trailing_zeros() as usize;
        dom &= dom - 1;
        *visited |= 1 << slot;
        if owner[slot] == NONE || augment(owner[slot], domains, owner, visited) {
            owner[slot] = item;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{tensor_elementary, tensor_product};
    use crate::membership::{check_labeled, recombine};

    fn shape(p: usize, q: usize) -> GridShape {
        GridShape::new(p, q).unwrap()
    }

    fn shuffled(k: &Graph, seed: u64) -> Graph {
        let n = k.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        k.relabel(&perm)
    }

    /// Every bijection vertices → cells, checked directly.
    fn brute_force_member(k: &Graph, s: GridShape) -> Option<Vec<usize>> {
        fn rec(k: &Graph, s: GridShape, cells: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            if cells.len() == k.vertex_count() {
                let labeling =
                    GridLabeling::new(s, cells.iter().map(|&c| s.cell(c)).collect()).unwrap();
                return check_labeled(k, &labeling).unwrap().is_none();
            }
            for c in 0..k.vertex_count() {
                if !used[c] {
                    used[c] = true;
                    cells.push(c);
                    if rec(k, s, cells, used) {
                        return true;
                    }
                    cells.pop();
                    used[c] = false;
                }
            }
            false
        }
        let mut cells = Vec::new();
        let mut used = vec![false; k.vertex_count()];
        rec(k, s, &mut cells, &mut used).then_some(cells)
    }

    #[test]
    fn prefilter_examples() {
        assert_eq!(prefilter(&Graph::path(4), shape(2, 2)), Prefilter::Fail(Reason::OddEdgeCount));
        // K4 has 6 edges, more than the bound 2, which fires first
        assert_eq!(prefilter(&Graph::complete(4), shape(2, 2)), Prefilter::Fail(Reason::EdgeBoundExceeded));
        let k22 = tensor_product(&Graph::complete(2), &Graph::complete(2));
        assert_eq!(prefilter(&k22, shape(2, 2)), Prefilter::Pass);
        assert_eq!(prefilter(&Graph::edgeless(5), shape(2, 2)), Prefilter::Fail(Reason::NoIndependentPartition));
    }

    #[test]
    fn independent_partition_exact() {
        let adj = adjacency_masks(&Graph::complete(4));
        assert!(!has_independent_partition(&adj, 2));
        assert!(has_independent_partition(&adj, 1));
        // triangle plus three isolated vertices: rows of size 3 need one
        // triangle vertex each
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(has_independent_partition(&adjacency_masks(&g), 2));
        assert!(!has_independent_partition(&adjacency_masks(&g), 3));
        let star = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!has_independent_partition(&adjacency_masks(&star), 3));
        assert!(has_independent_partition(&adjacency_masks(&star), 2));
    }

    #[test]
    fn permuted_k33_is_recognized() {
        let k = tensor_product(&Graph::complete(3), &Graph::complete(3));
        for seed in 1..20 {
            let g = shuffled(&k, seed);
            let cert = recognize(&g, shape(3, 3)).unwrap();
            assert!(cert.is_member());
            let labeling = cert.grid_labeling().unwrap().unwrap();
            let grid = recombine(shape(3, 3), cert.summands.as_ref().unwrap()).unwrap();
            assert_eq!(labeling.from_grid_order(&grid), g);
            assert_eq!(labeling.cell(0), (0, 0));
            cert.verify().unwrap();
        }
    }

    #[test]
    fn p4_and_c4_are_rejected() {
        let cert = recognize(&Graph::path(4), shape(2, 2)).unwrap();
        assert_eq!(cert.witness.unwrap().reason, Reason::OddEdgeCount);

        let c4 = Graph::cycle(4).unwrap();
        assert!(!recognize(&c4, shape(2, 2)).unwrap().is_member());
        let opts = RecognizeOptions { prefilter: false, ..Default::default() };
        let cert = recognize_with(&c4, shape(2, 2), opts).unwrap();
        assert_eq!(cert.witness.as_ref().unwrap().reason, Reason::SearchExhausted);
        cert.verify().unwrap();
        assert!(brute_force_member(&c4, shape(2, 2)).is_none());
    }

    #[test]
    fn wrong_order_is_an_error() {
        assert!(recognize(&Graph::edgeless(5), shape(2, 3)).is_err());
    }

    #[test]
    fn cancellation() {
        let flag = AtomicBool::new(true);
        let opts = RecognizeOptions { prefilter: false, cancel: Some(&flag) };
        let k = tensor_product(&Graph::complete(3), &Graph::complete(3));
        assert_eq!(recognize_with(&k, shape(3, 3), opts), Err(Error::Cancelled));
    }

    #[test]
    fn lexicographically_smallest_labeling() {
        // Brute force the smallest valid cell sequence and compare.
        let e = tensor_elementary(2, 3, 0, 1, 1, 2).unwrap();
        for seed in 1..10 {
            let g = shuffled(&e, seed);
            let cert = recognize(&g, shape(2, 3)).unwrap();
            let found: Vec<usize> = cert.labeling.unwrap().iter().map(|&(r, c)| r * 3 + c).collect();
            let expected = smallest_valid(&g, shape(2, 3)).unwrap();
            assert_eq!(found, expected);
        }
    }

    fn smallest_valid(k: &Graph, s: GridShape) -> Option<Vec<usize>> {
        // brute_force_member explores cells in increasing order per vertex,
        // so its first hit is the lexicographic minimum
        brute_force_member(k, s)
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        // all graphs on 6 vertices with at most 4 edges, at (2,3) and (3,2)
        let pairs: Vec<(usize, usize)> = crate::grid::pairs(6).collect();
        let mut checked = 0;
        for mask in 0u32..(1 << pairs.len()) {
            if mask.count_ones() > 4 {
                continue;
            }
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::new(6, &edges).unwrap();
            for s in [shape(2, 3), shape(3, 2)] {
                let cert = recognize(&g, s).unwrap();
                let brute = brute_force_member(&g, s);
                assert_eq!(cert.is_member(), brute.is_some(), "{g:?} at {s}");
                if let Some(cells) = brute {
                    let got: Vec<usize> = cert.labeling.unwrap().iter().map(|&(r, c)| s.index(r, c)).collect();
                    assert_eq!(got, cells);
                }
                checked += 1;
            }
        }
        assert!(checked > 1000);
    }
}
