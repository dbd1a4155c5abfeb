//! Tensor product, 2-sum and tensor 2-sums.
//!
//! Product vertices are laid out row-major: the pair `(i, j)` with `i` a
//! vertex of the left factor (on `p` vertices) and `j` a vertex of the right
//! factor (on `q` vertices) is vertex `i * q + j`. Under this ordering the
//! adjacency matrix of `g ⊗ h` is the Kronecker product of the factors'
//! matrices.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One `G ⊗ H` term of a tensor 2-sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSummand {
    pub g: Graph,
    pub h: Graph,
}

impl TensorSummand {
    pub fn new(g: Graph, h: Graph) -> Self {
        Self { g, h }
    }

    /// Factor orders `(p, q)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.g.vertex_count(), self.h.vertex_count())
    }

    pub fn is_nontrivial(&self) -> bool {
        self.g.edge_count() > 0 && self.h.edge_count() > 0
    }

    pub fn product(&self) -> Graph {
        tensor_product(&self.g, &self.h)
    }
}

pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let q = h.vertex_count();
    let mut k = Graph::edgeless(g.vertex_count() * q);
    let h_edges: Vec<_> = h.edges().collect();
    for (i, i2) in g.edges() {
        for &(j, j2) in &h_edges {
            k.set_edge(i * q + j, i2 * q + j2);
            k.set_edge(i * q + j2, i2 * q + j);
        }
    }
    k
}

/// Entrywise XOR of two adjacency matrices over a shared vertex set.
pub fn two_sum(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() != h.vertex_count() {
        return Err(Error::VertexCountMismatch {
            expected: g.vertex_count(),
            found: h.vertex_count(),
        });
    }
    let mut k = g.clone();
    k.xor_assign(h);
    Ok(k)
}

/// `E(i,i′;j,j′)`: the product of the single edge `{i,i′}` on `p` vertices with
/// the single edge `{j,j′}` on `q` vertices. Index pairs may be given in
/// either order.
pub fn tensor_elementary(p: usize, q: usize, i: usize, i2: usize, j: usize, j2: usize) -> Result<Graph> {
    let (i, i2) = (i.min(i2), i.max(i2));
    let (j, j2) = (j.min(j2), j.max(j2));
    if i == i2 || j == j2 || i2 >= p || j2 >= q {
        return Err(Error::InvalidElementary { p, q, i, i2, j, j2 });
    }
    let mut k = Graph::edgeless(p * q);
    k.set_edge(i * q + j, i2 * q + j2);
    k.set_edge(i * q + j2, i2 * q + j);
    Ok(k)
}

/// `⊕_k (G_k ⊗ H_k)`. All summands must share factor sizes `(p, q)` and
/// every factor must have at least one edge.
pub fn tensor_2sum(summands: &[TensorSummand]) -> Result<Graph> {
    let first = summands.first().ok_or(Error::EmptySum)?;
    let (expected_p, expected_q) = first.shape();
    for (index, s) in summands.iter().enumerate() {
        let (p, q) = s.shape();
        if (p, q) != (expected_p, expected_q) {
            return Err(Error::ShapeMismatch {
                index,
                p,
                q,
                expected_p,
                expected_q,
            });
        }
        if !s.is_nontrivial() {
            return Err(Error::TrivialFactor { index });
        }
    }
    let mut k = Graph::edgeless(expected_p * expected_q);
    for s in summands {
        k.xor_assign(&s.product());
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
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
    }

    fn arb_graph_on(n: usize) -> impl Strategy<Value = Graph> {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    }

    fn arb_nontrivial_on(n: usize) -> impl Strategy<Value = Graph> {
        arb_graph_on(n).prop_filter("needs an edge", |g| g.edge_count() > 0)
    }

    #[test]
    fn k2_times_k2_is_perfect_matching() {
        let k = tensor_product(&Graph::complete(2), &Graph::complete(2));
        assert_eq!(k.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn k4_times_k3_edge_count() {
        let k = tensor_product(&Graph::complete(4), &Graph::complete(3));
        assert_eq!(k.vertex_count(), 12);
        // direct count: (i,j)~(i',j') iff i≠i' and j≠j'
        let direct = (0..12)
            .flat_map(|a| (a + 1..12).map(move |b| (a, b)))
            .filter(|&(a, b)| a / 3 != b / 3 && a % 3 != b % 3)
            .count();
        assert_eq!(direct, 36);
        assert_eq!(k.edge_count(), direct);
    }

    #[test]
    fn product_with_edgeless_is_edgeless() {
        let k = tensor_product(&Graph::complete(3), &Graph::edgeless(4));
        assert_eq!((k.vertex_count(), k.edge_count()), (12, 0));
    }

    #[test]
    fn two_sum_examples() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(two_sum(&g, &g).unwrap(), Graph::edgeless(5));
        assert_eq!(two_sum(&g, &Graph::edgeless(5)).unwrap(), g);
        assert!(matches!(
            two_sum(&g, &Graph::edgeless(4)),
            Err(Error::VertexCountMismatch { .. })
        ));

        let big = tensor_product(&Graph::complete(4), &Graph::complete(3));
        let small = tensor_product(&Graph::cycle(4).unwrap(), &Graph::path(3));
        assert_eq!(small.edge_count(), 16);
        assert!(small.edges().all(|(u, v)| big.has_edge(u, v)));
        assert_eq!(two_sum(&big, &small).unwrap().edge_count(), 20);
    }

    #[test]
    fn elementary_examples() {
        let e = tensor_elementary(2, 2, 0, 1, 0, 1).unwrap();
        assert_eq!(e, tensor_product(&Graph::complete(2), &Graph::complete(2)));

        let e = tensor_elementary(2, 3, 0, 1, 0, 2).unwrap();
        // (0,0)=0, (1,2)=5, (0,2)=2, (1,0)=3
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![(0, 5), (2, 3)]);

        for (p, q) in [(2, 2), (3, 4), (4, 3)] {
            for i in 0..p {
                for i2 in i + 1..p {
                    for j in 0..q {
                        for j2 in j + 1..q {
                            let e = tensor_elementary(p, q, i, i2, j, j2).unwrap();
                            assert_eq!(e.edge_count(), 2);
                            let g = Graph::new(p, &[(i, i2)]).unwrap();
                            let h = Graph::new(q, &[(j, j2)]).unwrap();
                            assert_eq!(e, tensor_product(&g, &h));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_errors() {
        assert!(tensor_elementary(2, 2, 0, 0, 0, 1).is_err());
        assert!(tensor_elementary(2, 2, 0, 1, 1, 1).is_err());
        assert!(tensor_elementary(2, 2, 0, 2, 0, 1).is_err());
        assert!(tensor_elementary(3, 2, 0, 2, 0, 2).is_err());
        assert_eq!(
            tensor_elementary(3, 3, 2, 0, 1, 0).unwrap(),
            tensor_elementary(3, 3, 0, 2, 0, 1).unwrap()
        );
    }

    #[test]
    fn tensor_2sum_examples_and_errors() {
        let k2 = Graph::complete(2);
        let s = TensorSummand::new(k2.clone(), k2.clone());
        assert_eq!(tensor_2sum(std::slice::from_ref(&s)).unwrap(), tensor_product(&k2, &k2));
        assert_eq!(tensor_2sum(&[s.clone(), s.clone()]).unwrap(), Graph::edgeless(4));

        assert_eq!(tensor_2sum(&[]), Err(Error::EmptySum));
        let other = TensorSummand::new(k2.clone(), Graph::path(3));
        assert!(matches!(
            tensor_2sum(&[s.clone(), other]),
            Err(Error::ShapeMismatch { index: 1, .. })
        ));
        let trivial = TensorSummand::new(k2, Graph::edgeless(2));
        assert_eq!(tensor_2sum(&[s, trivial]), Err(Error::TrivialFactor { index: 1 }));
    }

    proptest! {
        #[test]
        fn product_edge_count(g in (1usize..6).prop_flat_map(arb_graph_on), h in (1usize..6).prop_flat_map(arb_graph_on)) {
            prop_assert_eq!(tensor_product(&g, &h).edge_count(), 2 * g.edge_count() * h.edge_count());
        }

        #[test]
        fn kronecker_identity(g in (1usize..6).prop_flat_map(arb_graph_on), h in (1usize..6).prop_flat_map(arb_graph_on)) {
            let k = tensor_product(&g, &h);
            let (p, q) = (g.vertex_count(), h.vertex_count());
            for a in 0..p * q {
                for b in 0..p * q {
                    let kron = g.has_edge(a / q, b / q) && h.has_edge(a % q, b % q);
                    prop_assert_eq!(k.has_edge(a, b), kron);
                }
            }
        }

        #[test]
        fn product_commutes_up_to_relabel(g in (1usize..6).prop_flat_map(arb_graph_on), h in (1usize..6).prop_flat_map(arb_graph_on)) {
            let (p, q) = (g.vertex_count(), h.vertex_count());
            let perm: Vec<usize> = (0..p * q).map(|v| (v % q) * p + v / q).collect();
            prop_assert_eq!(tensor_product(&g, &h).relabel(&perm), tensor_product(&h, &g));
        }

        #[test]
        fn two_sum_group_laws(
            (a, b, c) in (1usize..8).prop_flat_map(|n| (arb_graph_on(n), arb_graph_on(n), arb_graph_on(n)))
        ) {
            let n = a.vertex_count();
            prop_assert_eq!(two_sum(&a, &b).unwrap(), two_sum(&b, &a).unwrap());
            prop_assert_eq!(
                two_sum(&two_sum(&a, &b).unwrap(), &c).unwrap(),
                two_sum(&a, &two_sum(&b, &c).unwrap()).unwrap()
            );
            prop_assert_eq!(two_sum(&a, &Graph::edgeless(n)).unwrap(), a.clone());
            prop_assert_eq!(two_sum(&a, &a).unwrap(), Graph::edgeless(n));
        }

        #[test]
        fn distributivity(
            (g, h1, h2) in ((2usize..5), (2usize..5)).prop_flat_map(|(p, q)| (arb_nontrivial_on(p), arb_graph_on(q), arb_graph_on(q)))
        ) {
            let lhs = tensor_product(&g, &two_sum(&h1, &h2).unwrap());
            let rhs = two_sum(&tensor_product(&g, &h1), &tensor_product(&g, &h2)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
