//! Partial transpose of 0/1 matrices and the PPT test for graphs.

use crate::bitmatrix::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An `n × n` bit matrix viewed as a `p × p` grid of `q × q` blocks, `q = n / p`.
///
/// Block `(s1, s2)` covers rows `s1·q .. s1·q+q` and columns `s2·q .. s2·q+q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrix {
    p: usize,
    q: usize,
    bits: BitMatrix,
}

impl BlockMatrix {
    pub fn new(bits: BitMatrix, p: usize) -> Result<Self> {
        let n = bits.rows();
        if bits.cols() != n {
            return Err(Error::Parse(format!("matrix is {}x{}, expected square", n, bits.cols())));
        }
        if p == 0 || !n.is_multiple_of(p) {
            return Err(Error::BlockSize { n, p });
        }
        Ok(Self { p, q: n / p, bits })
    }

    pub fn from_graph(k: &Graph, p: usize) -> Result<Self> {
        let n = k.vertex_count();
        let mut bits = BitMatrix::zeros(n, n);
        for (u, v) in k.edges() {
            bits.set(u, v, true);
            bits.set(v, u, true);
        }
        Self::new(bits, p)
    }

    pub fn dimension(&self) -> usize {
        self.bits.rows()
    }

    pub fn blocks(&self) -> usize {
        self.p
    }

    pub fn block_size(&self) -> usize {
        self.q
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits.get(row, col)
    }

    /// Entry `(r1, r2)` of block `(s1, s2)`.
    #[inline]
    pub fn block_entry(&self, s1: usize, s2: usize, r1: usize, r2: usize) -> bool {
        self.bits.get(s1 * self.q + r1, s2 * self.q + r2)
    }

    pub fn is_block_symmetric(&self, s1: usize, s2: usize) -> bool {
        (0..self.q).all(|r1| (r1 + 1..self.q).all(|r2| self.block_entry(s1, s2, r1, r2) == self.block_entry(s1, s2, r2, r1)))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dimension();
        (0..n).all(|a| (a + 1..n).all(|b| self.get(a, b) == self.get(b, a)))
    }

    /// `n` lines of `n` characters `0`/`1`.
    pub fn to_text(&self) -> String {
        self.bits.to_string()
    }
}

/// Transposes each of the `p²` blocks in place; block positions are unchanged.
pub fn partial_transpose(m: &BlockMatrix) -> BlockMatrix {
    let q = m.q;
    let n = m.dimension();
    let mut out = BitMatrix::zeros(n, n);
    for row in 0..n {
        for col in 0..n {
            if m.get(row, col) {
                let (s1, r1) = (row / q, row % q);
                let (s2, r2) = (col / q, col % q);
                out.set(s1 * q + r2, s2 * q + r1, true);
            }
        }
    }
    BlockMatrix { p: m.p, q, bits: out }
}

/// Whether the adjacency matrix of `k` equals its partial transpose with `p`
/// blocks per side, i.e. every `q × q` block is symmetric.
pub fn ppt_test(k: &Graph, p: usize) -> Result<bool> {
    let n = k.vertex_count();
    if p < 2 || !n.is_multiple_of(p) {
        return Err(Error::BlockSize { n, p });
    }
    let m = BlockMatrix::from_graph(k, p)?;
    Ok((0..p).all(|s1| (0..p).all(|s2| m.is_block_symmetric(s1, s2))))
}
