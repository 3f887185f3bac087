use maxcol::cli::infer_scheme;
use maxcol::formats::{parse_dimacs, parse_wff, parse_witness, write_dimacs, write_wff, write_witness};
use maxcol::prov::{parse_scheme, provenance_json};
use maxcol_core::gadgets::{build_and, build_auxiliary, build_binomial, build_vertex_tree};
use maxcol_core::reductions::{forest_to_tree, reduce_ds, reduce_is, witness_coloring};
use maxcol_core::{GadgetParams, SourceGraph, WeightedForest};

fn all_graphs(n: usize) -> Vec<SourceGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            SourceGraph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

fn gadget_forests() -> Vec<WeightedForest> {
    let params = GadgetParams::new(2, 1).unwrap();
    let fresh = || WeightedForest::new(params.denominator().clone()).unwrap();
    let mut out = Vec::new();
    for i in 0..=7 {
        let mut f = fresh();
        build_binomial(&params, &mut f, i).unwrap();
        out.push(f);
    }
    for (i, j) in [(0, 0), (1, 0), (3, 2), (2, 1)] {
        let mut f = fresh();
        build_auxiliary(&params, &mut f, i, j).unwrap();
        out.push(f);
    }
    let mut f = fresh();
    let a = f.add_vertex(params.special(1));
    let b = f.add_vertex(params.special(1));
    build_and(&params, &mut f, &[a, b], 1).unwrap();
    out.push(f);
    let mut f = fresh();
    build_vertex_tree(&params, &mut f, 0, 1).unwrap();
    out.push(f);
    out
}

#[test]
fn wff_round_trips_every_generated_forest() {
    let g = SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let mut forests = gadget_forests();
    forests.push(reduce_is(&g, 2).unwrap().forest);
    let ds = reduce_ds(&g, 1).unwrap();
    forests.push(forest_to_tree(&ds).unwrap().forest);
    forests.push(ds.forest);
    for f in forests {
        let text = write_wff(&f);
        let back = parse_wff(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(write_wff(&back), text);
    }
}

#[test]
fn dimacs_round_trips_small_graphs() {
    for n in 0..=4 {
        for g in all_graphs(n) {
            assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
        }
    }
}

#[test]
fn witness_round_trip_of_a_reduction_witness() {
    let g = SourceGraph::from_edges(3, &[(0, 1)]).unwrap();
    let inst = reduce_is(&g, 2).unwrap();
    let z = [0usize, 2].into_iter().collect();
    let c = witness_coloring(&inst, &z).unwrap();
    assert_eq!(parse_witness(&write_witness(&c)).unwrap(), c);
}

#[test]
fn provenance_carries_the_scheme() {
    let g = SourceGraph::from_edges(3, &[(0, 1)]).unwrap();
    let inst = reduce_ds(&g, 1).unwrap();
    let tree = forest_to_tree(&inst).unwrap();
    for i in [&inst, &tree] {
        let json = provenance_json(i);
        assert_eq!(json["M_numerator"], i.threshold.to_string());
        assert_eq!(json["D"], "768");
        let s = parse_scheme(&json.to_string()).unwrap();
        assert_eq!(s.params, i.params);
        assert_eq!(s.scale, i.scale);
        assert_eq!(s.hub, i.hub);
        assert_eq!(s.color_bound, i.color_bound);
        let roots = json["vertices"].as_object().unwrap().values().filter(|v| v["role"] == "vtree_root").count();
        assert_eq!(roots, i.vtrees.len());
    }
    assert!(parse_scheme("{\"k\": 1}").is_err());
    assert!(parse_scheme("not json").is_err());
}

#[test]
fn scheme_inference_recognises_reduction_output() {
    let g = SourceGraph::from_edges(2, &[(0, 1)]).unwrap();
    let inst = reduce_is(&g, 1).unwrap();
    let (params, scale, hub) = infer_scheme(&inst.forest).unwrap();
    assert_eq!((params, scale, hub), (inst.params.clone(), 1, None));
    let tree = forest_to_tree(&reduce_ds(&g, 1).unwrap()).unwrap();
    let (params, scale, hub) = infer_scheme(&tree.forest).unwrap();
    assert_eq!((params, scale, hub), (tree.params.clone(), 2, tree.hub));
    let plain = parse_wff("wff 2 3\nv 0 1\nv 1 2\ne 0 1\n").unwrap();
    assert!(infer_scheme(&plain).is_none());
}
