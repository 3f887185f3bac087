use maxcol_core::reductions::{forest_to_tree, reduce_ds, reduce_is};
use maxcol_core::solvers::{sigma_min, sigma_r_tuple};
use maxcol_core::verify::*;
use maxcol_core::{GadgetParams, Problem, SourceGraph};

#[test]
fn lemma_points_hold_and_controls_fail() {
    for i in 0..=7 {
        let r = check_lemma_bin(1, 2, i).unwrap();
        assert!(r.success(), "{r:?}");
        assert!(r.colorings >= 1);
    }
    assert_eq!(check_lemma_bin(1, 2, 0).unwrap().colorings, 1);
    assert!(!control_lemma_bin(1, 2, 2, false).unwrap().success());
    assert!(!control_lemma_bin(1, 2, 4, true).unwrap().success());

    let r = check_lemma_aux(1, 2, 1, 1).unwrap();
    assert!(r.success());
    assert!(r.observations.iter().filter(|(name, _)| !name.starts_with("vacuous")).all(|(_, c)| *c > 0));
    assert!(!control_lemma_aux(1, 2, 1, 1).unwrap().success());

    for flavor in 0..2 {
        assert!(check_lemma_and(1, 2, flavor).unwrap().success());
        assert!(!control_lemma_and(1, 2, flavor).unwrap().success());
    }
    let r = check_lemma_vtree(1, 2).unwrap();
    assert!(r.success(), "{r:?}");
    assert_eq!(r.observations.len(), 2);
    assert!(!control_lemma_vtree(1, 2).unwrap().success());
}

#[test]
fn structured_matches_general_solver() {
    let k2 = SourceGraph::from_edges(2, &[(0, 1)]).unwrap();
    let is = reduce_is(&k2, 1).unwrap();
    let s = sigma_gadget(&is);
    assert_eq!(s.method, GadgetMethod::Structured);
    assert_eq!(s.result.weight(), sigma_min(&is.forest, None).weight());

    let p3 = SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    for g in [p3, SourceGraph::new(2)] {
        let ds = reduce_ds(&g, 1).unwrap();
        let tree = forest_to_tree(&ds).unwrap();
        for inst in [&ds, &tree] {
            let s = sigma_gadget(inst);
            assert_eq!(s.method, GadgetMethod::Structured);
            let general = sigma_r_tuple(&inst.forest, inst.color_bound.unwrap(), None);
            assert_eq!(s.result.weight(), general.weight());
        }
    }
}

#[test]
fn off_scheme_forests_fall_back() {
    let k2 = SourceGraph::from_edges(2, &[(0, 1)]).unwrap();
    let is = reduce_is(&k2, 1).unwrap();
    let doubled = is.forest.rescaled(3);
    let s = sigma_gadget_forest(&doubled, &is.params, None, None);
    assert!(matches!(s.method, GadgetMethod::Fallback(_)));
    assert_eq!(s.result.weight().map(|w| w.rescaled(1)), sigma_min(&doubled, None).weight().cloned());
}

#[test]
fn offset_sum_identity() {
    for (n, k) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
        let p = GadgetParams::new(n, k).unwrap();
        let levels = p.level_count();
        let budget = p.threshold();
        // every vector of one offset per level
        let mut v = vec![0usize; levels];
        loop {
            let o = OffsetVector(v.clone());
            assert_eq!(o.weight(&p) <= budget, o.total() <= k * (n - 1), "{v:?}");
            let mut pos = 0;
            while pos < levels && v[pos] == n {
                v[pos] = 0;
                pos += 1;
            }
            if pos == levels || levels > 8 && pos > 3 {
                break;
            }
            v[pos] += 1;
        }
    }
}

#[test]
fn surviving_vectors_and_memo_monotonicity() {
    let g = SourceGraph::from_edges(2, &[(0, 1)]).unwrap();
    let inst = reduce_is(&g, 1).unwrap();
    let mut memo = StructuredSolver::for_instance(&inst).unwrap();
    let mut plain = StructuredSolver::for_instance(&inst).unwrap().without_memo();
    let vectors = memo.vectors(inst.params.offset_budget());
    // Σ j <= 1 over the variable levels 1 and 3 (candidates 0..=2)
    assert!(vectors.len() <= 9);
    let window = memo.vectors(memo.window() - 1);
    let results: Vec<bool> = window.iter().map(|(v, h)| plain.feasible(v, *h)).collect();
    for ((v, h), &r) in window.iter().zip(&results) {
        assert_eq!(memo.feasible(v, *h), r, "{v:?}");
    }
    for (a, ra) in window.iter().zip(&results) {
        for (b, rb) in window.iter().zip(&results) {
            let dominated = a.0 .0.iter().zip(&b.0 .0).all(|(x, y)| x <= y);
            if dominated && *ra {
                assert!(*rb, "{:?} feasible but {:?} not", a.0, b.0);
            }
        }
    }
}

#[test]
fn end_to_end_small_points() {
    let two = SourceGraph::new(2);
    let k2 = SourceGraph::from_edges(2, &[(0, 1)]).unwrap();
    let r = e2e_check(Problem::IndependentSet, &two, 2).unwrap();
    assert!(r.success() && r.reduced_yes, "{r:?}");
    let r = e2e_check(Problem::IndependentSet, &k2, 2).unwrap();
    assert!(r.success() && !r.reduced_yes, "{r:?}");
    let p3 = SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let r = e2e_check(Problem::DominatingSet, &p3, 1).unwrap();
    assert!(r.success() && r.reduced_yes && r.color_bound == Some(8));
    let r = e2e_check_tree(Problem::DominatingSet, &two, 1).unwrap();
    assert!(r.success() && !r.reduced_yes && r.components == 1 && r.color_bound == Some(9));
}
