//! Tensor 2-sums of graphs.
//!
//! A tensor 2-sum is the symmetric difference of tensor products
//! `G₁⊗H₁ ⊕ … ⊕ G_l⊗H_l` of nontrivial graphs on a common vertex set. The
//! class `K(p, q)` collects those whose factors have `p` and `q` vertices.
//!
//! Vertex `v` of a graph on `p·q` vertices sits in grid cell
//! `(v / q, v % q)` unless a [`GridLabeling`] says otherwise.

pub mod algebra;
pub mod bitmatrix;
pub mod builder;
pub mod census;
pub mod certificate;
pub mod error;
pub mod formats;
pub mod graph;
pub mod grid;
pub mod iso;
pub mod membership;
pub mod recognition;
pub mod t2;
pub mod transpose;

pub use algebra::{tensor_2sum, tensor_elementary, tensor_product, two_sum, TensorSummand};
pub use builder::{build_ppt_graph, verify_components};
pub use certificate::{Certificate, Reason, Verdict, Witness};
pub use error::{Error, Result};
pub use graph::{Graph, StandardKind};
pub use grid::{GridLabeling, GridShape};
pub use membership::{elementary_decomposition, is_spanning_cross_like, Elementary};
pub use recognition::{recognize, recognize_with, RecognizeOptions};
pub use t2::{t2_bruteforce_oracle, t2_exact, PairMatrix};
pub use transpose::{partial_transpose, ppt_test, BlockMatrix};
