//! PPT graphs with prescribed components.
//!
//! From a graph `G` on `n` vertices with `m` edges, build `H` on the `n × n`
//! grid with edges `{(i,i),(j,j)}` and `{(i,j),(j,i)}` for every edge `{i,j}`
//! of `G`. The diagonal cells carry a copy of `G`, each edge of `G` adds one
//! off-diagonal `K₂`, and the other `n² − n − 2m` cells are isolated. `H` is a
//! spanning cross-like subgraph of `K_n ⊗ K_n`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{GridLabeling, GridShape};
use crate::iso::{are_isomorphic, degree_sequence};

/// Order, size and degree sequence of one connected component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentSketch {
    pub order: usize,
    pub edges: usize,
    pub degrees: Vec<usize>,
}

/// Multiset of component sketches, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub components: Vec<ComponentSketch>,
}

impl ComponentSummary {
    pub fn of(g: &Graph) -> Self {
        let mut components: Vec<ComponentSketch> = component_graphs(g).iter().map(sketch).collect();
        components.sort();
        Self { components }
    }

    pub fn total_order(&self) -> usize {
        self.components.iter().map(|c| c.order).sum()
    }

    /// Number of components equal to `K₂`.
    pub fn k2_count(&self) -> usize {
        self.components.iter().filter(|c| c.order == 2).count()
    }

    /// Number of isolated vertices.
    pub fn k1_count(&self) -> usize {
        self.components.iter().filter(|c| c.order == 1).count()
    }
}

fn sketch(c: &Graph) -> ComponentSketch {
    ComponentSketch {
        order: c.vertex_count(),
        edges: c.edge_count(),
        degrees: degree_sequence(c),
    }
}

fn component_graphs(g: &Graph) -> Vec<Graph> {
    g.components().iter().map(|vs| g.induced(vs)).collect()
}

/// Builds the member of `K(n, n)` described above, with the row-major labeling.
pub fn build_ppt_graph(g: &Graph) -> Result<(Graph, GridLabeling)> {
    let n = g.vertex_count();
    let shape = GridShape::new(n, n).map_err(|_| Error::TooFewVertices {
        kind: "ppt-builder input",
        min: 2,
        n,
    })?;
    let mut h = Graph::edgeless(n * n);
    for (i, j) in g.edges() {
        h.set_edge(i * n + i, j * n + j);
        h.set_edge(i * n + j, j * n + i);
    }
    Ok((h, GridLabeling::identity(shape)))
}

/// Whether the components of `h` are those of `g`, plus `m` copies of `K₂`,
/// plus `n² − n − 2m` isolated vertices, with `m = |E(g)|`. Components are
/// matched up to isomorphism.
pub fn verify_components(h: &Graph, g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if h.vertex_count() != n * n || 2 * m + n > n * n {
        return false;
    }
    let mut expected = component_graphs(g);
    expected.extend(std::iter::repeat_n(Graph::complete(2), m));
    expected.extend(std::iter::repeat_n(Graph::edgeless(1), n * n - n - 2 * m));
    let actual = component_graphs(h);
    if actual.len() != expected.len() {
        return false;
    }
    let mut taken = vec![false; expected.len()];
    actual.iter().all(|c| {
        let s = sketch(c);
        let hit = expected
            .iter()
            .enumerate()
            .find(|(idx, e)| !taken[*idx] && sketch(e) == s && are_isomorphic(c, e));
        match hit {
            Some((idx, _)) => {
                taken[idx] = true;
                true
            }
            None => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tensor_product;
    use crate::certificate::Verdict;
    use crate::graph::disjoint_union;
    use crate::membership::is_spanning_cross_like;
    use crate::transpose::ppt_test;

    #[test]
    fn k2_gives_k2_times_k2() {
        let (h, _) = build_ppt_graph(&Graph::complete(2)).unwrap();
        assert_eq!(h, tensor_product(&Graph::complete(2), &Graph::complete(2)));
        assert!(verify_components(&h, &Graph::complete(2)));
    }

    #[test]
    fn component_structure() {
        let (h, _) = build_ppt_graph(&Graph::complete(3)).unwrap();
        let s = ComponentSummary::of(&h);
        assert_eq!(s.total_order(), 9);
        assert_eq!((s.k2_count(), s.k1_count()), (3, 0));
        assert!(verify_components(&h, &Graph::complete(3)));

        let (h, _) = build_ppt_graph(&Graph::path(3)).unwrap();
        let s = ComponentSummary::of(&h);
        assert_eq!((s.k2_count(), s.k1_count()), (2, 2));
        assert_eq!(s.components.len(), 5);
        assert!(verify_components(&h, &Graph::path(3)));
        assert!(!verify_components(&h, &Graph::complete(3)));
    }

    #[test]
    fn verify_rejects_mismatches() {
        assert!(!verify_components(&Graph::edgeless(9), &Graph::complete(3)));
        assert!(!verify_components(&Graph::edgeless(8), &Graph::complete(3)));
        // K3 ∪ 3K2 but with a P3 instead of K3
        let fake = disjoint_union(&[Graph::path(3), Graph::complete(2), Graph::complete(2), Graph::complete(2)]);
        assert!(!verify_components(&fake, &Graph::complete(3)));
    }

    #[test]
    fn disconnected_input_keeps_its_components() {
        let g = disjoint_union(&[Graph::complete(2), Graph::edgeless(1), Graph::complete(2)]);
        let (h, _) = build_ppt_graph(&g).unwrap();
        assert!(verify_components(&h, &g));
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn too_small() {
        assert!(build_ppt_graph(&Graph::edgeless(1)).is_err());
        assert!(build_ppt_graph(&Graph::edgeless(0)).is_err());
    }

    #[test]
    fn all_graphs_up_to_five_vertices() {
        for n in 2..=5 {
            let all: Vec<(usize, usize)> = crate::grid::pairs(n).collect();
            for mask in 0u32..(1 << all.len()) {
                let edges: Vec<_> = all.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::new(n, &edges).unwrap();
                let (h, labeling) = build_ppt_graph(&g).unwrap();
                let shape = labeling.shape();
                assert_eq!(is_spanning_cross_like(&h, shape).unwrap().verdict, Verdict::Member);
                assert_eq!(h.edge_count(), 2 * g.edge_count());
                let diagonal: Vec<usize> = (0..n).map(|i| i * n + i).collect();
                assert_eq!(h.induced(&diagonal), g);
                assert!(ppt_test(&h, n).unwrap());
                assert!(verify_components(&h, &g));
            }
        }
    }
}
