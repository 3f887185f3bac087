use std::collections::BTreeSet;

use maxcol_core::reductions::{extract_solution, forest_to_tree, reduce_ds, reduce_is, witness_coloring};
use maxcol_core::solvers::{max_is, min_ds};
use maxcol_core::{coloring_weight, is_proper, GadgetTag, SourceGraph};

fn graphs(n: usize) -> Vec<SourceGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            SourceGraph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    (0..1u32 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect()
}

#[test]
fn is_witnesses_round_trip_for_every_solution() {
    for n in 1..=3 {
        for g in graphs(n) {
            let inst = reduce_is(&g, 1.max(n - 1)).unwrap();
            for z in subsets(n, inst.params.k()) {
                let c = witness_coloring(&inst, &z);
                if !g.is_independent(&z) {
                    assert!(c.is_err());
                    continue;
                }
                let c = c.unwrap();
                assert!(is_proper(&inst.forest, &c).unwrap());
                assert_eq!(coloring_weight(&inst.forest, &c).unwrap(), inst.threshold);
                assert_eq!(c.nonempty_class_count(), inst.params.level_count());
                assert_eq!(extract_solution(&inst, &c).unwrap(), z);
            }
        }
    }
}

#[test]
fn ds_witnesses_respect_the_color_bound() {
    for g in graphs(3) {
        let inst = reduce_ds(&g, 1).unwrap();
        let tree = forest_to_tree(&inst).unwrap();
        for z in subsets(3, 1) {
            if !g.is_dominating(&z) {
                assert!(witness_coloring(&inst, &z).is_err());
                continue;
            }
            for target in [&inst, &tree] {
                let c = witness_coloring(target, &z).unwrap();
                assert!(c.nonempty_class_count() <= target.color_bound.unwrap());
                assert_eq!(coloring_weight(&target.forest, &c).unwrap(), target.threshold);
                assert_eq!(extract_solution(target, &c).unwrap(), z);
            }
        }
    }
}

#[test]
fn largest_component_depends_on_k_only() {
    for k in 1..=1 {
        let mut sizes = BTreeSet::new();
        for n in 2..=6 {
            let path = SourceGraph::from_edges(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>()).unwrap();
            let inst = reduce_is(&path, k).unwrap();
            sizes.insert(inst.forest.components().iter().map(Vec::len).max().unwrap());
            assert_eq!(inst.forest.components().len(), 1 + (n - 1) * k * k + n * k * (k - 1) + n * k);
        }
        assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![52 << (4 * k)]);
    }
}

#[test]
fn provenance_points_at_vertex_tree_roots() {
    let g = SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let inst = reduce_is(&g, 2).unwrap();
    let standalone = inst.vtrees.iter().filter(|t| t.tag == GadgetTag::Standalone).count();
    assert_eq!(standalone, 6);
    for t in &inst.vtrees {
        let role = inst.provenance[&t.root];
        assert_eq!(role.index, Some((t.i, t.j)));
        assert_eq!(role.tag, t.tag);
        assert!(t.root < inst.forest.vertex_count());
    }
    assert!(inst.vtrees.iter().any(|t| matches!(t.tag, GadgetTag::Edge { u: 0, v: 1, i1: 1, i2: 0 })));
}

#[test]
fn oracles_agree_with_hand_answers() {
    let k3 = SourceGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let p3 = SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let two = SourceGraph::new(2);
    assert!(max_is(&k3, 2).is_none());
    assert_eq!(max_is(&two, 2), Some([0, 1].into_iter().collect()));
    assert_eq!(max_is(&p3, 2), Some([0, 2].into_iter().collect()));
    assert_eq!(min_ds(&p3, 1), Some([1].into_iter().collect()));
    assert!(min_ds(&two, 1).is_none());
    assert_eq!(min_ds(&k3, 1).map(|s| s.len()), Some(1));
}
