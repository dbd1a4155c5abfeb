//! Labeled membership in `K(p, q)`.
//!
//! A labeled graph is a member exactly when it is a spanning cross-like
//! subgraph of `K_p ⊗ K_q`: no edge joins two vertices in the same grid row
//! or column, and every edge `{(i,j),(i′,j′)}` comes with its partner
//! `{(i,j′),(i′,j)}`. Each such pair of edges is one tensor-elementary graph,
//! and the member is the 2-sum of them.

use serde::{Deserialize, Serialize};

use crate::algebra::tensor_elementary;
use crate::certificate::{Certificate, Reason, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{GridLabeling, GridShape};

/// Indices of `E(i,i′;j,j′)` with `i < i′` and `j < j′`. Serialized as `[i, i′, j, j′]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 4]", into = "[usize; 4]")]
pub struct Elementary {
    pub i: usize,
    pub i2: usize,
    pub j: usize,
    pub j2: usize,
}

impl From<[usize; 4]> for Elementary {
    fn from([i, i2, j, j2]: [usize; 4]) -> Self {
        Self { i, i2, j, j2 }
    }
}

impl From<Elementary> for [usize; 4] {
    fn from(e: Elementary) -> Self {
        [e.i, e.i2, e.j, e.j2]
    }
}

impl Elementary {
    pub fn graph(&self, shape: GridShape) -> Result<Graph> {
        tensor_elementary(shape.p(), shape.q(), self.i, self.i2, self.j, self.j2)
    }
}

/// Checks the two membership conditions under `labeling`, returning the
/// first violating edge in lexicographic edge order.
pub fn check_labeled(k: &Graph, labeling: &GridLabeling) -> Result<Option<Witness>> {
    labeling.shape().check_order(k)?;
    for (u, v) in k.edges() {
        let (r1, c1) = labeling.cell(u);
        let (r2, c2) = labeling.cell(v);
        if r1 == r2 || c1 == c2 {
            return Ok(Some(Witness::edge(Reason::SameRowOrColumnEdge, u, v)));
        }
        if !k.has_edge(labeling.vertex_at(r1, c2), labeling.vertex_at(r2, c1)) {
            return Ok(Some(Witness::edge(Reason::MissingCrossPartner, u, v)));
        }
    }
    Ok(None)
}

/// Membership of `k` under the row-major labeling `v ↦ (v div q, v mod q)`.
pub fn is_spanning_cross_like(k: &Graph, shape: GridShape) -> Result<Certificate> {
    certify_labeled(k, &GridLabeling::identity(shape))
}

/// Membership of `k` under an arbitrary labeling.
pub fn certify_labeled(k: &Graph, labeling: &GridLabeling) -> Result<Certificate> {
    match check_labeled(k, labeling)? {
        Some(witness) => Ok(Certificate::non_member(k, labeling.shape(), Some(labeling.clone()), witness)),
        None => {
            let summands = collect_elementary(k, labeling);
            Ok(Certificate::member(k, labeling.clone(), summands))
        }
    }
}

fn collect_elementary(k: &Graph, labeling: &GridLabeling) -> Vec<Elementary> {
    let shape = labeling.shape();
    let mut out = Vec::new();
    for i in 0..shape.p() {
        for i2 in i + 1..shape.p() {
            for j in 0..shape.q() {
                for j2 in j + 1..shape.q() {
                    if k.has_edge(labeling.vertex_at(i, j), labeling.vertex_at(i2, j2)) {
                        out.push(Elementary { i, i2, j, j2 });
                    }
                }
            }
        }
    }
    out
}

/// The elementary summands of a labeled member, sorted by `(i, i′, j, j′)`.
pub fn elementary_decomposition(k: &Graph, shape: GridShape) -> Result<Vec<Elementary>> {
    elementary_decomposition_labeled(k, &GridLabeling::identity(shape))
}

pub fn elementary_decomposition_labeled(k: &Graph, labeling: &GridLabeling) -> Result<Vec<Elementary>> {
    if check_labeled(k, labeling)?.is_some() {
        return Err(Error::NotMember);
    }
    Ok(collect_elementary(k, labeling))
}

/// 2-sum of elementary graphs in grid order (vertex `i·q + j`).
pub fn recombine(shape: GridShape, summands: &[Elementary]) -> Result<Graph> {
    let mut k = Graph::edgeless(shape.vertex_count());
    for e in summands {
        k.xor_assign(&e.graph(shape)?);
    }
    Ok(k)
}

/// `(2·C(p,2)·C(q,2), edge_count(k) == bound)`.
pub fn edge_bound_check(k: &Graph, shape: GridShape) -> Result<(usize, bool)> {
    shape.check_order(k)?;
    let bound = shape.edge_bound();
    Ok((bound, k.edge_count() == bound))
}
