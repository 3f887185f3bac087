mod common;

use maxcol_core::coloring::class_weights;
use maxcol_core::{coloring_weight, is_proper, Coloring, ScaledWeight, WeightedForest};
use proptest::prelude::*;

fn any_coloring(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..4, n)
}

proptest! {
    #[test]
    fn edges_plus_components_is_vertices(f in common::forest_strategy(12)) {
        prop_assert_eq!(f.edge_count(), f.vertex_count() - f.components().len());
    }

    #[test]
    fn weight_ignores_color_names(
        (f, a) in common::forest_strategy(9).prop_flat_map(|f| { let n = f.vertex_count(); (Just(f), any_coloring(n)) }),
        perm in Just([0usize, 1, 2, 3]).prop_shuffle(),
    ) {
        let c = Coloring::new(a.clone(), 4).unwrap();
        let p = Coloring::new(a.iter().map(|&x| perm[x]).collect(), 4).unwrap();
        prop_assert_eq!(coloring_weight(&f, &c).unwrap(), coloring_weight(&f, &p).unwrap());
        prop_assert_eq!(is_proper(&f, &c).unwrap(), is_proper(&f, &p).unwrap());
    }

    #[test]
    fn unit_weights_count_classes(
        (f, a) in common::forest_strategy(9).prop_flat_map(|f| { let n = f.vertex_count(); (Just(f), any_coloring(n)) }),
    ) {
        let mut unit = WeightedForest::new(1u32).unwrap();
        for _ in 0..f.vertex_count() {
            unit.add_vertex(ScaledWeight::from(1));
        }
        for (u, v) in f.edges() {
            unit.add_edge(u, v).unwrap();
        }
        let c = Coloring::new(a, 4).unwrap();
        prop_assert_eq!(coloring_weight(&unit, &c).unwrap(), ScaledWeight::from(c.nonempty_class_count() as u64));
    }

    #[test]
    fn merging_independent_classes_never_costs_more(
        (f, a) in common::forest_strategy(9).prop_flat_map(|f| { let n = f.vertex_count(); (Just(f), any_coloring(n)) }),
        x in 0usize..4,
        y in 0usize..4,
    ) {
        let c = Coloring::new(a.clone(), 4).unwrap();
        prop_assume!(is_proper(&f, &c).unwrap());
        let crosses = f.edges().any(|(u, v)| {
            let (cu, cv) = (a[u], a[v]);
            (cu == x && cv == y) || (cu == y && cv == x)
        });
        prop_assume!(!crosses);
        let merged = Coloring::new(a.iter().map(|&z| if z == y { x } else { z }).collect(), 4).unwrap();
        prop_assert!(is_proper(&f, &merged).unwrap());
        prop_assert!(coloring_weight(&f, &merged).unwrap() <= coloring_weight(&f, &c).unwrap());
    }

    #[test]
    fn class_weights_sum_to_coloring_weight(
        (f, a) in common::forest_strategy(9).prop_flat_map(|f| { let n = f.vertex_count(); (Just(f), any_coloring(n)) }),
    ) {
        let c = Coloring::new(a, 4).unwrap();
        let total: ScaledWeight = class_weights(&f, &c).unwrap().into_iter().sum();
        prop_assert_eq!(total, coloring_weight(&f, &c).unwrap());
    }
}

#[test]
fn disjoint_union_of_paths() {
    let p2 = common::build(&[1, 1], &[None, Some(0)]);
    let p3 = common::build(&[1, 1, 1], &[None, Some(0), Some(1)]);
    let (u, remap) = p2.disjoint_union(&p3).unwrap();
    assert_eq!((u.vertex_count(), u.edge_count(), u.components().len()), (5, 3, 2));
    assert_eq!(remap, vec![2, 3, 4]);
    let empty = WeightedForest::new(1u32).unwrap();
    assert_eq!(p2.disjoint_union(&empty).unwrap().0, p2);
    let other = WeightedForest::new(2u32).unwrap();
    assert!(p2.disjoint_union(&other).is_err());
}
