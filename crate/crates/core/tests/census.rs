use tensum::census::{census, census_stats};
use tensum::t2::{gf2_rank, minimal_representation, single_product};
use tensum::{tensor_2sum, tensor_product, GridShape};

fn shape(p: usize, q: usize) -> GridShape {
    GridShape::new(p, q).unwrap()
}

#[test]
fn rank_never_exceeds_summand_count() {
    for (p, q) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        for e in census(shape(p, q), false).unwrap() {
            let ones = e.pairs.count_ones();
            assert!(gf2_rank(&e.pairs) <= ones);
            if ones > 0 {
                assert!(e.t2 <= ones);
            } else {
                assert_eq!(e.t2, 2);
            }
        }
    }
}

#[test]
fn minimal_representations_rebuild_the_census() {
    for (p, q) in [(2, 3), (3, 3)] {
        for e in census(shape(p, q), false).unwrap() {
            let rep = minimal_representation(&e.pairs);
            assert_eq!(rep.len(), e.t2);
            assert_eq!(tensor_2sum(&rep).unwrap(), e.graph);
            let single = single_product(&e.pairs);
            assert_eq!(single.is_some(), e.t2 == 1);
            if let Some(s) = single {
                assert_eq!(tensor_product(&s.g, &s.h), e.graph);
            }
        }
    }
}

#[test]
fn transposed_shape_has_the_same_t2_distribution() {
    let a = census_stats(shape(2, 4), false).unwrap();
    let b = census_stats(shape(4, 2), false).unwrap();
    assert_eq!(a.t2_histogram, b.t2_histogram);
    assert_eq!(a.edge_histogram, b.edge_histogram);
    assert_eq!(a.count, 64);
}

#[test]
fn three_by_four_stats() {
    let s = census_stats(shape(3, 4), false).unwrap();
    assert_eq!(s.count, 1 << 18);
    assert_eq!(s.edge_bound, 36);
    assert_eq!(s.bound_attained, 1);
    // 3×6 GF(2) matrices by rank 0..3 (closed-form count): 1, 441, 27342, 234360
    let t2: Vec<(usize, u64)> = s.t2_histogram.into_iter().collect();
    assert_eq!(t2, vec![(1, 441), (2, 27343), (3, 234360)]);
}
