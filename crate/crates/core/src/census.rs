//! Exhaustive enumeration of the spanning cross-like graphs at one shape.
//!
//! Every labeled member of `K(p, q)` is fixed by its pair matrix, so the
//! census at `(p, q)` has `2^(C(p,2)·C(q,2))` entries. Entry `x` has pair bit
//! `k` (row-major) equal to bit `B−1−k` of `x`, so ascending `x` is ascending
//! bit string order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitmatrix::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::GridShape;
use crate::t2::{t2_of, PairMatrix};

/// Largest number of pair bits enumerated without an override.
pub const CENSUS_BIT_LIMIT: usize = 20;
/// Largest number of pair bits enumerated at all.
pub const CENSUS_BIT_HARD_LIMIT: usize = 30;

#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub index: u64,
    pub pairs: PairMatrix,
    pub graph: Graph,
    pub edges: usize,
    pub t2: usize,
    pub attains_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusStats {
    pub shape: GridShape,
    pub count: u64,
    pub edge_bound: usize,
    pub edge_histogram: BTreeMap<usize, u64>,
    pub t2_histogram: BTreeMap<usize, u64>,
    pub bound_attained: u64,
}

pub fn pair_bits(shape: GridShape) -> usize {
    shape.row_pairs() * shape.col_pairs()
}

fn check_scale(shape: GridShape, allow_large: bool) -> Result<usize> {
    let bits = pair_bits(shape);
    let limit = if allow_large { CENSUS_BIT_HARD_LIMIT } else { CENSUS_BIT_LIMIT };
    if bits > limit {
        let hint = if allow_large { "" } else { "; pass the override to raise the limit" };
        return Err(Error::ScaleExceeded(format!(
            "census at {shape} has 2^{bits} graphs, limit is 2^{limit}{hint}"
        )));
    }
    Ok(bits)
}

/// The pair matrix of census entry `index`.
pub fn pair_matrix_at(shape: GridShape, index: u64) -> PairMatrix {
    let (rows, cols) = (shape.row_pairs(), shape.col_pairs());
    let bits = rows * cols;
    let mut m = BitMatrix::zeros(rows, cols);
    for k in 0..bits {
        if index >> (bits - 1 - k) & 1 == 1 {
            m.set(k / cols, k % cols, true);
        }
    }
    PairMatrix::from_bits(shape, m)
}

pub fn entry_at(shape: GridShape, index: u64) -> CensusEntry {
    let pairs = pair_matrix_at(shape, index);
    let graph = pairs.to_graph();
    let edges = graph.edge_count();
    CensusEntry {
        index,
        t2: t2_of(&pairs),
        attains_bound: edges == shape.edge_bound(),
        pairs,
        graph,
        edges,
    }
}

/// All entries in canonical order.
pub fn census(shape: GridShape, allow_large: bool) -> Result<Vec<CensusEntry>> {
    let bits = check_scale(shape, allow_large)?;
    Ok((0..1u64 << bits).into_par_iter().map(|x| entry_at(shape, x)).collect())
}

pub fn census_stats(shape: GridShape, allow_large: bool) -> Result<CensusStats> {
    let bits = check_scale(shape, allow_large)?;
    let bound = shape.edge_bound();
    type Acc = (BTreeMap<usize, u64>, BTreeMap<usize, u64>, u64);
    let merge = |mut a: Acc, b: Acc| {
        for (k, v) in b.0 {
            *a.0.entry(k).or_default() += v;
        }
        for (k, v) in b.1 {
            *a.1.entry(k).or_default() += v;
        }
        a.2 += b.2;
        a
    };
    let (edge_histogram, t2_histogram, bound_attained) = (0..1u64 << bits)
        .into_par_iter()
        .fold(Acc::default, |mut acc, x| {
            let pairs = pair_matrix_at(shape, x);
            // each set pair bit contributes exactly two edges
            let edges = 2 * pairs.count_ones();
            *acc.0.entry(edges).or_default() += 1;
            *acc.1.entry(t2_of(&pairs)).or_default() += 1;
            acc.2 += u64::from(edges == bound);
            acc
        })
        .reduce(Acc::default, merge);
    Ok(CensusStats {
        shape,
        count: 1u64 << bits,
        edge_bound: bound,
        edge_histogram,
        t2_histogram,
        bound_attained,
    })
}
