//! Machine-checkable membership verdicts.
//!
//! A certificate carries the graph it speaks about, so [`Certificate::verify`]
//! can recheck every claim without further input. JSON field names are
//! stable: `verdict`, `shape`, `graph`, `labeling`, `summands`, `witness`,
//! `flags`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{GridLabeling, GridShape};
use crate::membership::{recombine, Elementary};
use crate::recognition::{self, Prefilter};

/// Set on member certificates whose decomposition has no summands (the
/// edgeless graph). A tensor 2-sum needs at least one summand, so such a
/// graph is only reached with two equal products.
pub const FLAG_EMPTY_DECOMPOSITION: &str = "empty-decomposition";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    OddEdgeCount,
    EdgeBoundExceeded,
    NoIndependentPartition,
    SameRowOrColumnEdge,
    MissingCrossPartner,
    SearchExhausted,
}

impl Reason {
    pub fn tag(self) -> &'static str {
        match self {
            Reason::OddEdgeCount => "odd-edge-count",
            Reason::EdgeBoundExceeded => "edge-bound-exceeded",
            Reason::NoIndependentPartition => "no-independent-partition",
            Reason::SameRowOrColumnEdge => "same-row-or-column-edge",
            Reason::MissingCrossPartner => "missing-cross-partner",
            Reason::SearchExhausted => "search-exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub reason: Reason,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
}

impl Witness {
    pub fn reason(reason: Reason) -> Self {
        Self { reason, edge: None }
    }

    pub fn edge(reason: Reason, u: usize, v: usize) -> Self {
        Self { reason, edge: Some((u, v)) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphRecord {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, &self.edges).map_err(|e| Error::Certificate(format!("graph: {e}")))
    }
}

impl From<&Graph> for GraphRecord {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub shape: GridShape,
    pub graph: GraphRecord,
    /// Cell `(row, col)` of each vertex.
    pub labeling: Option<Vec<(usize, usize)>>,
    /// Elementary summands in grid coordinates, sorted.
    pub summands: Option<Vec<Elementary>>,
    pub witness: Option<Witness>,
    #[serde(default)]
    pub flags: Vec<String>,
}

impl Certificate {
    pub fn member(k: &Graph, labeling: GridLabeling, summands: Vec<Elementary>) -> Self {
        let flags = if summands.is_empty() {
            vec![FLAG_EMPTY_DECOMPOSITION.to_string()]
        } else {
            Vec::new()
        };
        Self {
            verdict: Verdict::Member,
            shape: labeling.shape(),
            graph: k.into(),
            labeling: Some(labeling.cells().to_vec()),
            summands: Some(summands),
            witness: None,
            flags,
        }
    }

    pub fn non_member(k: &Graph, shape: GridShape, labeling: Option<GridLabeling>, witness: Witness) -> Self {
        Self {
            verdict: Verdict::NonMember,
            shape,
            graph: k.into(),
            labeling: labeling.map(|l| l.cells().to_vec()),
            summands: None,
            witness: Some(witness),
            flags: Vec::new(),
        }
    }

    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }

    pub fn grid_labeling(&self) -> Result<Option<GridLabeling>> {
        self.labeling
            .as_ref()
            .map(|cells| GridLabeling::new(self.shape, cells.clone()))
            .transpose()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Certificate(e.to_string()))
    }

    /// Rechecks the claims of the certificate from its own contents.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Certificate(msg));
        let k = self.graph.to_graph()?;
        if k.vertex_count() != self.shape.vertex_count() {
            return fail(format!("graph has {} vertices, shape {} needs {}", k.vertex_count(), self.shape, self.shape.vertex_count()));
        }
        let labeling = self.grid_labeling()?;
        match self.verdict {
            Verdict::Member => {
                let Some(labeling) = labeling else {
                    return fail("member certificate without labeling".into());
                };
                let Some(summands) = &self.summands else {
                    return fail("member certificate without summands".into());
                };
                if self.witness.is_some() {
                    return fail("member certificate carries a witness".into());
                }
                if summands.windows(2).any(|w| w[0] >= w[1]) {
                    return fail("summands are not strictly sorted".into());
                }
                let grid = recombine(self.shape, summands).map_err(|e| Error::Certificate(e.to_string()))?;
                if labeling.from_grid_order(&grid) != k {
                    return fail("summands do not recombine to the graph".into());
                }
                let flagged = self.flags.iter().any(|f| f == FLAG_EMPTY_DECOMPOSITION);
                if flagged != summands.is_empty() {
                    return fail("empty-decomposition flag inconsistent with summands".into());
                }
                Ok(())
            }
            Verdict::NonMember => {
                let Some(witness) = &self.witness else {
                    return fail("non-member certificate without witness".into());
                };
                if self.summands.is_some() {
                    return fail("non-member certificate carries summands".into());
                }
                self.verify_refusal(&k, labeling.as_ref(), witness)
            }
        }
    }

    fn verify_refusal(&self, k: &Graph, labeling: Option<&GridLabeling>, witness: &Witness) -> Result<()> {
        let fail = |msg: &str| Err(Error::Certificate(format!("{}: {msg}", witness.reason.tag())));
        match witness.reason {
            Reason::OddEdgeCount => {
                if k.edge_count() % 2 == 1 {
                    Ok(())
                } else {
                    fail("edge count is even")
                }
            }
            Reason::EdgeBoundExceeded => {
                if k.edge_count() > self.shape.edge_bound() {
                    Ok(())
                } else {
                    fail("edge count within bound")
                }
            }
            Reason::NoIndependentPartition => match recognition::prefilter(k, self.shape) {
                Prefilter::Fail(Reason::NoIndependentPartition) => Ok(()),
                _ => fail("an independent partition exists"),
            },
            Reason::SameRowOrColumnEdge | Reason::MissingCrossPartner => {
                let Some(labeling) = labeling else {
                    return fail("labeled witness without labeling");
                };
                let Some((u, v)) = witness.edge else {
                    return fail("labeled witness without edge");
                };
                let n = k.vertex_count();
                if u >= n || v >= n || !k.has_edge(u, v) {
                    return fail("witness edge is not in the graph");
                }
                let (r1, c1) = labeling.cell(u);
                let (r2, c2) = labeling.cell(v);
                let aligned = r1 == r2 || c1 == c2;
                let holds = if witness.reason == Reason::SameRowOrColumnEdge {
                    aligned
                } else {
                    !aligned && !k.has_edge(labeling.vertex_at(r1, c2), labeling.vertex_at(r2, c1))
                };
                if holds {
                    Ok(())
                } else {
                    fail("witness edge does not violate the condition")
                }
            }
            Reason::SearchExhausted => {
                let cert = recognition::recognize(k, self.shape)?;
                if cert.is_member() {
                    fail("search finds a labeling")
                } else {
                    Ok(())
                }
            }
        }
    }
}
