//! Exact isomorphism for small graphs by degree-constrained backtracking.

use crate::graph::Graph;

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|u| g.degree(u)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() || degree_sequence(a) != degree_sequence(b) {
        return false;
    }
    // Map high-degree vertices first; they constrain the rest most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(a.degree(u)));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &order, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for v in 0..b.vertex_count() {
        if used[v] || a.degree(u) != b.degree(v) {
            continue;
        }
        let fits = order[..depth].iter().all(|&w| a.has_edge(u, w) == b.has_edge(v, map[w]));
        if !fits {
            continue;
        }
        map[u] = v;
        used[v] = true;
        if extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        used[v] = false;
        map[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 = crate::graph::disjoint_union(&[Graph::complete(3), Graph::complete(3)]);
        assert_eq!(degree_sequence(&c6), degree_sequence(&two_c3));
        assert!(!are_isomorphic(&c6, &two_c3));
        assert!(are_isomorphic(&c6, &c6.relabel(&[3, 1, 5, 0, 2, 4])));
        assert!(are_isomorphic(&Graph::edgeless(0), &Graph::edgeless(0)));
        assert!(!are_isomorphic(&Graph::path(3), &Graph::edgeless(3)));
    }
}
