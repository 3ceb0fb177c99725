use biscount::colsub::count_induced;
use biscount::fptcount::{count_is_k_bounded, count_lis_bounded, count_maxlis_bounded, neighbourhood_profile};
use biscount::graph::{parse_bipartite, parse_coloured, to_coloured};
use biscount::homcount::count_hom;
use biscount::oracle::{Brute, Guards};
use biscount::reductions::{
    clique_gadget, clique_gadget_identity, cliques_via_complement, domsets_via_lis, maxis_via_maxlis, rainbow_via_is_k,
    BoundedDegreeOracle, CountingOracle, ExhaustiveOracle,
};
use biscount::{BipartiteGraph, ColouredGraph, Count, Graph};

fn c(x: u64) -> Count {
    Count::from(x)
}

fn path() -> BipartiteGraph {
    parse_bipartite("c u1 - v1 - u2\np bis 2 1 2\ne 1 1\ne 2 1\n").unwrap()
}

#[test]
fn path_counts_from_a_file() {
    let g = path();
    assert_eq!(count_lis_bounded(&g, 1, 2).unwrap(), c(2));
    assert_eq!(count_is_k_bounded(&g, 2, 2).unwrap(), c(1));
    assert_eq!(count_maxlis_bounded(&g, 2, 2).unwrap(), (2, c(1)));
    let p = neighbourhood_profile(&g, 1, 2).unwrap();
    assert_eq!((p.get(0), p.get(1)), (c(0), c(2)));
    let h = parse_coloured("p col 2 1 2\nv 1 1\nv 2 2\ne 1 2\n").unwrap();
    assert_eq!(count_hom(&h, &to_coloured(&g)).unwrap(), c(2));
    assert_eq!(count_induced(&h, &to_coloured(&g), 2).unwrap(), c(2));
}

#[test]
fn oracles_agree_through_every_pipeline() {
    let g = parse_bipartite("p bis 3 3 4\ne 1 1\ne 2 1\ne 2 2\ne 3 3\n").unwrap();
    let exhaustive = ExhaustiveOracle::default();
    let bounded = BoundedDegreeOracle { delta: 2 };
    let a = maxis_via_maxlis(&g, &exhaustive).unwrap();
    let b = maxis_via_maxlis(&g, &bounded).unwrap();
    assert_eq!(a.value, b.value);
    assert_eq!(a.value, Brute::default().maxis(&g).unwrap().1);
    assert_eq!(a.trace.oracle_answers, b.trace.oracle_answers);
    assert_eq!(exhaustive.name(), "exhaustive");
    assert_eq!(bounded.name(), "bounded-degree");
}

#[test]
fn domsets_and_cliques() {
    let g = Graph::cycle(5);
    let brute = Brute::default();
    for k in 1..=3 {
        let out = domsets_via_lis(&g, k, &ExhaustiveOracle::default()).unwrap();
        assert_eq!(out.value, brute.dominating(&g, k).unwrap());
        assert_eq!(out.trace.instances.len(), g.n() + 1);
    }
    let b = path();
    assert_eq!(cliques_via_complement(&b, 2, &brute).unwrap().value, brute.is_k(&b, 2).unwrap());
}

#[test]
fn rainbow_small_cases() {
    let edge = ColouredGraph::new(vec![1, 2], [(0, 1)]).unwrap();
    let oracle = ExhaustiveOracle::default();
    assert_eq!(rainbow_via_is_k(1, &edge, &oracle).unwrap().value, c(1));
    let two = edge.disjoint_union(&edge);
    assert_eq!(rainbow_via_is_k(1, &two, &oracle).unwrap().value, c(2));
    let none = ColouredGraph::new(vec![1, 2], Vec::<(usize, usize)>::new()).unwrap();
    assert_eq!(rainbow_via_is_k(1, &none, &oracle).unwrap().value, c(0));
}

#[test]
fn clique_gadget_examples() {
    let wide = ExhaustiveOracle::new(Guards { vertices: 40, ..Guards::default() });
    let empty = Graph::empty(3);
    let gadget = clique_gadget(&empty, 3, 0).unwrap();
    assert_eq!(wide.maxlis(&gadget.incidence, gadget.ell).unwrap().1, c(1));
    let k4 = Graph::complete(4);
    let gadget = clique_gadget(&k4, 3, 0).unwrap();
    assert_eq!(wide.maxlis(&gadget.incidence, gadget.ell).unwrap().1, c(5));
    assert_eq!(clique_gadget_identity(&k4, 3, &wide).unwrap().value, c(4));
    // c = 1 blows each vertex up n^2 times
    let g = clique_gadget(&Graph::path(2), 2, 1).unwrap();
    assert_eq!(g.t, 4);
    assert_eq!(g.powered.n(), 2 * 4 + 2);
    assert!(clique_gadget(&k4, 1, 0).is_err());
}
