//! Grid shapes `(p, q)` and vertex-to-cell labelings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Factor sizes of `K(p, q)`: `p` grid rows, `q` grid columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShape", into = "RawShape")]
pub struct GridShape {
    p: usize,
    q: usize,
}

#[derive(Serialize, Deserialize)]
struct RawShape {
    p: usize,
    q: usize,
}

impl TryFrom<RawShape> for GridShape {
    type Error = Error;

    fn try_from(raw: RawShape) -> Result<Self> {
        GridShape::new(raw.p, raw.q)
    }
}

impl From<GridShape> for RawShape {
    fn from(s: GridShape) -> Self {
        RawShape { p: s.p, q: s.q }
    }
}

impl GridShape {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidShape { p, q });
        }
        Ok(Self { p, q })
    }

    #[inline]
    pub fn p(self) -> usize {
        self.p
    }

    #[inline]
    pub fn q(self) -> usize {
        self.q
    }

    #[inline]
    pub fn vertex_count(self) -> usize {
        self.p * self.q
    }

    /// Rows and columns swapped.
    pub fn transposed(self) -> Self {
        Self { p: self.q, q: self.p }
    }

    /// Row-major cell of vertex `v`.
    #[inline]
    pub fn cell(self, v: usize) -> (usize, usize) {
        (v / self.q, v % self.q)
    }

    #[inline]
    pub fn index(self, row: usize, col: usize) -> usize {
        row * self.q + col
    }

    /// Number of unordered row pairs, `C(p, 2)`.
    pub fn row_pairs(self) -> usize {
        self.p * (self.p - 1) / 2
    }

    /// Number of unordered column pairs, `C(q, 2)`.
    pub fn col_pairs(self) -> usize {
        self.q * (self.q - 1) / 2
    }

    /// `2·C(p,2)·C(q,2)`, the edge count of `K_p ⊗ K_q`.
    pub fn edge_bound(self) -> usize {
        2 * self.row_pairs() * self.col_pairs()
    }

    pub(crate) fn check_order(self, g: &Graph) -> Result<()> {
        if g.vertex_count() != self.vertex_count() {
            return Err(Error::VertexCountMismatch {
                expected: self.vertex_count(),
                found: g.vertex_count(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for GridShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Position of the unordered pair `{a, b}` (with `a < b < n`) in the
/// lexicographic list of all pairs of `0..n`.
#[inline]
pub(crate) fn pair_index(a: usize, b: usize, n: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// All pairs `(a, b)` with `a < b < n`, in [`pair_index`] order.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

/// A bijection from vertices `0..p·q` to grid cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridLabeling {
    shape: GridShape,
    cells: Vec<(usize, usize)>,
    at: Vec<usize>,
}

impl GridLabeling {
    /// The row-major identification `v ↦ (v div q, v mod q)`.
    pub fn identity(shape: GridShape) -> Self {
        let cells = (0..shape.vertex_count()).map(|v| shape.cell(v)).collect();
        let at = (0..shape.vertex_count()).collect();
        Self { shape, cells, at }
    }

    pub fn new(shape: GridShape, cells: Vec<(usize, usize)>) -> Result<Self> {
        let n = shape.vertex_count();
        if cells.len() != n {
            return Err(Error::VertexCountMismatch {
                expected: n,
                found: cells.len(),
            });
        }
        let mut at = vec![usize::MAX; n];
        for (v, &(r, c)) in cells.iter().enumerate() {
            if r >= shape.p() || c >= shape.q() {
                return Err(Error::Certificate(format!("cell ({r}, {c}) of vertex {v} outside grid {shape}")));
            }
            let slot = &mut at[shape.index(r, c)];
            if *slot != usize::MAX {
                return Err(Error::Certificate(format!("cell ({r}, {c}) assigned twice")));
            }
            *slot = v;
        }
        Ok(Self { shape, cells, at })
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    #[inline]
    pub fn cell(&self, v: usize) -> (usize, usize) {
        self.cells[v]
    }

    /// Vertex sitting at `(row, col)`.
    #[inline]
    pub fn vertex_at(&self, row: usize, col: usize) -> usize {
        self.at[self.shape.index(row, col)]
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// `k` relabeled so that the vertex at cell `(r, c)` becomes `r·q + c`.
    pub fn to_grid_order(&self, k: &Graph) -> Graph {
        let perm: Vec<usize> = self.cells.iter().map(|&(r, c)| self.shape.index(r, c)).collect();
        k.relabel(&perm)
    }

    /// Inverse of [`GridLabeling::to_grid_order`].
    pub fn from_grid_order(&self, grid: &Graph) -> Graph {
        grid.relabel(&self.at)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_validation() {
        assert!(GridShape::new(1, 3).is_err());
        assert!(GridShape::new(3, 0).is_err());
        let s = GridShape::new(4, 3).unwrap();
        assert_eq!(s.vertex_count(), 12);
        assert_eq!(s.edge_bound(), 36);
        assert_eq!(s.cell(7), (2, 1));
        assert_eq!(s.index(2, 1), 7);
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        for n in 2..8 {
            for (k, (a, b)) in pairs(n).enumerate() {
                assert_eq!(pair_index(a, b, n), k);
            }
        }
    }

    #[test]
    fn labeling_rejects_non_bijection() {
        let s = GridShape::new(2, 2).unwrap();
        assert!(GridLabeling::new(s, vec![(0, 0), (0, 0), (1, 0), (1, 1)]).is_err());
        assert!(GridLabeling::new(s, vec![(0, 0), (0, 2), (1, 0), (1, 1)]).is_err());
        assert!(GridLabeling::new(s, vec![(0, 0)]).is_err());
        let l = GridLabeling::new(s, vec![(1, 1), (0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(l.vertex_at(1, 1), 0);
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        let grid = l.to_grid_order(&g);
        assert!(grid.has_edge(3, 0));
        assert_eq!(l.from_grid_order(&grid), g);
    }
}
