//! Simple undirected graphs stored as bit-packed symmetric adjacency rows.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Row `u` holds one bit per vertex `v`; the matrix is kept symmetric with a
/// zero diagonal. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// Builds a graph from a list of unordered pairs. Duplicate pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        let words = words_for(n);
        Self {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 1..n {
            g.set_edge(u - 1, u);
        }
        g
    }

    /// Cycle on `n >= 3` vertices; smaller `n` is rejected.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices {
                kind: "cycle",
                min: 3,
                n,
            });
        }
        let mut g = Self::path(n);
        g.set_edge(n - 1, 0);
        Ok(g)
    }

    /// One of the named families on vertices `0..n` with consecutive labeling.
    pub fn standard(kind: StandardKind, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::TooFewVertices {
                kind: kind.name(),
                min: 1,
                n,
            });
        }
        match kind {
            StandardKind::Complete => Ok(Self::complete(n)),
            StandardKind::Path => Ok(Self::path(n)),
            StandardKind::Cycle => Self::cycle(n),
            StandardKind::Edgeless => Ok(Self::edgeless(n)),
        }
    }

    /// Builds a graph from a dense 0/1 matrix. The matrix must be square,
    /// symmetric and have a zero diagonal.
    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::edgeless(n);
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "matrix row {u} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if row[u] {
                return Err(Error::SelfLoop(u));
            }
            for (v, &bit) in row.iter().enumerate() {
                if bit != rows[v][u] {
                    return Err(Error::Parse(format!("matrix is not symmetric at ({u}, {v})")));
                }
                if bit && u < v {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        let ones: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        ones as usize / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Neighbours of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Word-wise XOR of adjacency rows; the caller guarantees equal order.
    pub(crate) fn xor_assign(&mut self, other: &Graph) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            *a ^= *b;
        }
    }

    /// Returns the graph in which old vertex `v` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph::edgeless(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::edgeless(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(a, b);
                }
            }
        }
        g
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Symmetric, loop-free adjacency. Always true for values built through this API.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u) && self.neighbors(u).all(|v| self.has_edge(v, u)))
    }

    /// Dense 0/1 rows, one string of `n` characters per vertex.
    pub fn to_matrix_string(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for u in 0..self.n {
            for v in 0..self.n {
                s.push(if self.has_edge(u, v) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Disjoint union; vertices of each part are shifted by the running offset.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::vertex_count).sum();
    let mut g = Graph::edgeless(n);
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            g.set_edge(u + offset, v + offset);
        }
        offset += part.vertex_count();
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    Path,
    Cycle,
    Edgeless,
}

impl StandardKind {
    pub fn name(self) -> &'static str {
        match self {
            StandardKind::Complete => "complete",
            StandardKind::Path => "path",
            StandardKind::Cycle => "cycle",
            StandardKind::Edgeless => "edgeless",
        }
    }
}

impl FromStr for StandardKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" | "K" => Ok(StandardKind::Complete),
            "path" | "P" => Ok(StandardKind::Path),
            "cycle" | "C" => Ok(StandardKind::Cycle),
            "edgeless" | "empty" | "E" => Ok(StandardKind::Edgeless),
            other => Err(Error::InvalidKind(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn new_graph_examples() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4, Graph::path(4));

        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(e3.edge_count(), 0);

        let k2 = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2, Graph::complete(2));
    }

    #[test]
    fn new_graph_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(Graph::standard(StandardKind::Complete, 4).unwrap().edge_count(), 6);
        assert_eq!(Graph::standard(StandardKind::Path, 4).unwrap().edge_count(), 3);
        assert_eq!(Graph::standard(StandardKind::Cycle, 4).unwrap().edge_count(), 4);
        assert_eq!(Graph::standard(StandardKind::Edgeless, 5).unwrap().edge_count(), 0);
        assert!(Graph::standard(StandardKind::Cycle, 2).is_err());
        assert!(Graph::standard(StandardKind::Path, 0).is_err());
        assert!("wheel".parse::<StandardKind>().is_err());
        assert_eq!("cycle".parse::<StandardKind>().unwrap(), StandardKind::Cycle);
    }

    #[test]
    fn union_examples() {
        let k2 = Graph::complete(2);
        let two_k2 = disjoint_union(&[k2.clone(), k2]);
        assert_eq!(two_k2.vertex_count(), 4);
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);

        let g = disjoint_union(&[Graph::complete(3), Graph::edgeless(2)]);
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 3));

        assert_eq!(disjoint_union(&[]).vertex_count(), 0);
    }

    #[test]
    fn wide_graphs_cross_word_boundaries() {
        let g = Graph::new(130, &[(0, 129), (63, 64), (64, 127)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 127]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_well_formed());
    }

    #[test]
    fn matrix_round_trip_and_rejection() {
        let g = Graph::path(4);
        let dense: Vec<Vec<bool>> = (0..4).map(|u| (0..4).map(|v| g.has_edge(u, v)).collect()).collect();
        assert_eq!(Graph::from_matrix(&dense).unwrap(), g);
        let mut bad = dense.clone();
        bad[0][1] = false;
        assert!(Graph::from_matrix(&bad).is_err());
        let mut looped = dense;
        looped[2][2] = true;
        assert_eq!(Graph::from_matrix(&looped), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn components_of_union() {
        let g = disjoint_union(&[Graph::path(3), Graph::edgeless(1), Graph::complete(2)]);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn constructed_graphs_are_well_formed(g in arb_graph(12)) {
            prop_assert!(g.is_well_formed());
            let ones: usize = (0..g.vertex_count()).map(|u| g.degree(u)).sum();
            prop_assert_eq!(ones, 2 * g.edge_count());
        }

        #[test]
        fn union_adds_edge_counts(a in arb_graph(7), b in arb_graph(7)) {
            let u = disjoint_union(&[a.clone(), b.clone()]);
            prop_assert!(u.is_well_formed());
            prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
            prop_assert_eq!(u.vertex_count(), a.vertex_count() + b.vertex_count());
        }
    }
}
