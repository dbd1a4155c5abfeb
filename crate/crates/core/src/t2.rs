//! Minimal number of tensor-product summands, `T₂`.
//!
//! For a labeled member of `K(p, q)` record one bit per cross pair: row
//! `{i,i′}`, column `{j,j′}`, set when the edges `{(i,j),(i′,j′)}` and
//! `{(i,j′),(i′,j)}` are present. A product `G ⊗ H` of nontrivial factors has
//! the rank-one pair matrix `e(G)·e(H)ᵀ`, where `e(·)` is the edge indicator,
//! and every nonzero rank-one matrix arises this way. So a nonzero member
//! needs exactly `rank` summands over GF(2). The edgeless member has rank 0
//! but needs two equal products.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::algebra::{tensor_product, TensorSummand};
use crate::bitmatrix::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{pair_index, pairs, GridLabeling, GridShape};
use crate::membership::{check_labeled, Elementary};
use crate::recognition::for_each_labeling;

/// `C(p,2) × C(q,2)` matrix over GF(2), one bit per elementary summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMatrix {
    shape: GridShape,
    bits: BitMatrix,
}

impl PairMatrix {
    pub fn zeros(shape: GridShape) -> Self {
        Self {
            shape,
            bits: BitMatrix::zeros(shape.row_pairs(), shape.col_pairs()),
        }
    }

    pub fn from_summands(shape: GridShape, summands: &[Elementary]) -> Result<Self> {
        let mut m = Self::zeros(shape);
        for e in summands {
            // validates the indices
            e.graph(shape)?;
            let (r, c) = (pair_index(e.i, e.i2, shape.p()), pair_index(e.j, e.j2, shape.q()));
            m.bits.set(r, c, !m.bits.get(r, c));
        }
        Ok(m)
    }

    pub(crate) fn from_bits(shape: GridShape, bits: BitMatrix) -> Self {
        debug_assert_eq!((bits.rows(), bits.cols()), (shape.row_pairs(), shape.col_pairs()));
        Self { shape, bits }
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    /// Bit for row pair `{i,i′}` and column pair `{j,j′}`.
    pub fn get(&self, i: usize, i2: usize, j: usize, j2: usize) -> bool {
        let (i, i2) = (i.min(i2), i.max(i2));
        let (j, j2) = (j.min(j2), j.max(j2));
        self.bits.get(pair_index(i, i2, self.shape.p()), pair_index(j, j2, self.shape.q()))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    /// The member graph in grid order whose pair matrix this is.
    pub fn to_graph(&self) -> Graph {
        let (p, q) = (self.shape.p(), self.shape.q());
        let mut k = Graph::edgeless(p * q);
        for (r, (i, i2)) in pairs(p).enumerate() {
            for (c, (j, j2)) in pairs(q).enumerate() {
                if self.bits.get(r, c) {
                    k.set_edge(i * q + j, i2 * q + j2);
                    k.set_edge(i * q + j2, i2 * q + j);
                }
            }
        }
        k
    }

    /// Pair matrix of the grid transpose `(i, j) ↦ (j, i)`.
    pub fn transposed(&self) -> Self {
        Self {
            shape: self.shape.transposed(),
            bits: self.bits.transpose(),
        }
    }
}

/// Pair matrix of `k` under the row-major labeling.
pub fn pair_matrix(k: &Graph, shape: GridShape) -> Result<PairMatrix> {
    pair_matrix_labeled(k, &GridLabeling::identity(shape))
}

pub fn pair_matrix_labeled(k: &Graph, labeling: &GridLabeling) -> Result<PairMatrix> {
    if check_labeled(k, labeling)?.is_some() {
        return Err(Error::NotMember);
    }
    let shape = labeling.shape();
    let mut m = PairMatrix::zeros(shape);
    for (r, (i, i2)) in pairs(shape.p()).enumerate() {
        for (c, (j, j2)) in pairs(shape.q()).enumerate() {
            if k.has_edge(labeling.vertex_at(i, j), labeling.vertex_at(i2, j2)) {
                m.bits.set(r, c, true);
            }
        }
    }
    Ok(m)
}

pub fn gf2_rank(m: &PairMatrix) -> usize {
    m.bits.rank()
}

/// `T₂` from a pair matrix: its rank, or 2 when it is zero.
pub fn t2_of(m: &PairMatrix) -> usize {
    match gf2_rank(m) {
        0 => 2,
        r => r,
    }
}

/// `T₂` of a member under the row-major labeling.
pub fn t2_exact(k: &Graph, shape: GridShape) -> Result<usize> {
    Ok(t2_of(&pair_matrix(k, shape)?))
}

pub fn t2_exact_labeled(k: &Graph, labeling: &GridLabeling) -> Result<usize> {
    Ok(t2_of(&pair_matrix_labeled(k, labeling)?))
}

/// A representation with exactly [`t2_of`] summands, in grid order.
///
/// Picks a maximal independent set of rows `b_1 … b_r` and writes every row
/// as a combination of them; summand `k` pairs the row pairs using `b_k`
/// with the column pairs of `b_k`.
pub fn minimal_representation(m: &PairMatrix) -> Vec<TensorSummand> {
    let (p, q) = (m.shape.p(), m.shape.q());
    let rows = m.bits.rows();
    let cols = m.bits.cols();
    if m.bits.is_zero() {
        let g = Graph::new(p, &[(0, 1)]).expect("p >= 2");
        let h = Graph::new(q, &[(0, 1)]).expect("q >= 2");
        let s = TensorSummand::new(g, h);
        return vec![s.clone(), s];
    }

    let row_bits = |r: usize| -> Vec<bool> { (0..cols).map(|c| m.bits.get(r, c)).collect() };
    let xor_into = |a: &mut [bool], b: &[bool]| a.iter_mut().zip(b).for_each(|(x, y)| *x ^= *y);

    // echelon entries: (vector, pivot column, combination of basis rows)
    let mut echelon: Vec<(Vec<bool>, usize, Vec<bool>)> = Vec::new();
    let mut basis: Vec<Vec<bool>> = Vec::new();
    let mut coeffs: Vec<Vec<bool>> = Vec::with_capacity(rows);
    let cap = rows.min(cols);
    for r in 0..rows {
        let mut v = row_bits(r);
        let mut combo = vec![false; cap];
        for (e, pivot, ec) in &echelon {
            if v[*pivot] {
                xor_into(&mut v, e);
                xor_into(&mut combo, ec);
            }
        }
        match v.iter().position(|&b| b) {
            None => coeffs.push(combo),
            Some(pivot) => {
                let k = basis.len();
                basis.push(row_bits(r));
                combo[k] ^= true;
                echelon.push((v, pivot, combo));
                let mut own = vec![false; cap];
                own[k] = true;
                coeffs.push(own);
            }
        }
    }

    let row_pairs: Vec<(usize, usize)> = pairs(p).collect();
    let col_pairs: Vec<(usize, usize)> = pairs(q).collect();
    basis
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let g_edges: Vec<_> = (0..rows).filter(|&r| coeffs[r][k]).map(|r| row_pairs[r]).collect();
            let h_edges: Vec<_> = (0..cols).filter(|&c| b[c]).map(|c| col_pairs[c]).collect();
            TensorSummand::new(
                Graph::new(p, &g_edges).expect("pairs are in range"),
                Graph::new(q, &h_edges).expect("pairs are in range"),
            )
        })
        .collect()
}

/// The single factor pair when `T₂ = 1`.
pub fn single_product(m: &PairMatrix) -> Option<TensorSummand> {
    if gf2_rank(m) != 1 {
        return None;
    }
    minimal_representation(m).pop()
}

/// Smallest `T₂` over all labelings that make `k` a member, or `None` for a
/// non-member.
pub fn t2_min_over_labelings(k: &Graph, shape: GridShape) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    let mut failure = None;
    for_each_labeling(k, shape, None, &mut |labeling| match t2_exact_labeled(k, labeling) {
        Ok(t) => {
            best = Some(best.map_or(t, |b| b.min(t)));
            if t == 1 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        }
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(best),
    }
}

/// Largest `C(p,2) + C(q,2)` the brute-force oracle accepts.
pub const ORACLE_PAIR_LIMIT: usize = 12;

/// Exact minimum number of nontrivial products `G ⊗ H` (on `p` and `q`
/// vertices, labeled row-major) whose 2-sum is `k`, searching multisets of
/// size `1, 2, …, max_l`. `None` if no representation that small exists.
///
/// Works on edge masks of the materialized products and never looks at pair
/// matrices.
pub fn t2_bruteforce_oracle(k: &Graph, shape: GridShape, max_l: usize) -> Result<Option<usize>> {
    shape.check_order(k)?;
    let (p, q) = (shape.p(), shape.q());
    if shape.row_pairs() + shape.col_pairs() > ORACLE_PAIR_LIMIT {
        return Err(Error::ScaleExceeded(format!(
            "oracle needs C(p,2)+C(q,2) <= {ORACLE_PAIR_LIMIT}, shape {shape} has {}",
            shape.row_pairs() + shape.col_pairs()
        )));
    }
    let n = p * q;
    let to_mask = |g: &Graph| g.edges().fold(0u128, |m, (u, v)| m | 1 << pair_index(u, v, n));
    let left = nontrivial_graphs(p);
    let right = nontrivial_graphs(q);
    let products: Vec<u128> = left
        .iter()
        .flat_map(|g| right.iter().map(move |h| tensor_product(g, h)))
        .map(|kh| to_mask(&kh))
        .collect();
    let target = to_mask(k);

    for l in 1..=max_l {
        let found = (0..products.len())
            .into_par_iter()
            .any(|first| xor_search(&products, target, l - 1, first, products[first]));
        if found {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

fn nontrivial_graphs(n: usize) -> Vec<Graph> {
    let all: Vec<(usize, usize)> = pairs(n).collect();
    (1u64..1 << all.len())
        .map(|mask| {
            let edges: Vec<_> = all.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).expect("pairs are in range")
        })
        .collect()
}

/// Whether `depth` more products with index `>= start` XOR `acc` to `target`.
fn xor_search(products: &[u128], target: u128, depth: usize, start: usize, acc: u128) -> bool {
    if depth == 0 {
        return acc == target;
    }
    (start..products.len()).any(|i| xor_search(products, target, depth - 1, i, acc ^ products[i]))
}
