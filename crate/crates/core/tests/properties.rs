use alphacrit_core::{
    alpha, alpha_number, canonical_form, duplicate_vertex, is_isomorphic, odd_subdivide, one_join,
    parse_graph6, split_partitions, split_vertex, to_graph6, EdgeRef, Graph, JoinQuadruple,
    VertexSet,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut pairs = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            pairs.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_pairs(n, &pairs).unwrap()
            },
        )
    })
}

fn with_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        subsequence((0..n).collect::<Vec<_>>(), 0..=n)
            .prop_map(move |vs| (g.clone(), VertexSet::from_vertices(n, vs).unwrap()))
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let pairs: Vec<_> = g.edges().iter().map(|e| (perm[e.u], perm[e.v])).collect();
    Graph::from_pairs(g.n(), &pairs).unwrap()
}

fn brute_alpha(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|m| {
            g.edges()
                .iter()
                .all(|e| m >> e.u & 1 == 0 || m >> e.v & 1 == 0)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = to_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_ignores_labels(
        (g, perms) in graph(12).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), proptest::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 10))
        })
    ) {
        let f = canonical_form(&g);
        for p in &perms {
            prop_assert_eq!(&canonical_form(&relabel(&g, p)), &f);
        }
    }

    #[test]
    fn solver_matches_subsets(g in graph(14)) {
        let r = alpha(&g);
        prop_assert_eq!(r.alpha, brute_alpha(&g));
        prop_assert_eq!(r.witness.len(), r.alpha);
        for u in r.witness.iter() {
            for v in r.witness.iter() {
                prop_assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn neighbourhood_is_union_of_vertex_neighbourhoods((g, s) in with_subset(16)) {
        let whole = g.neighborhood(&s).unwrap();
        let mut parts = VertexSet::empty(g.n());
        for v in s.iter() {
            parts = parts.union(&g.neighbors(v));
        }
        prop_assert_eq!(whole, parts);
        let (h, map) = g.induced_subgraph(&s).unwrap();
        prop_assert_eq!(h.n(), s.len());
        for e in h.edges() {
            prop_assert!(g.has_edge(map.new_to_old[e.u], map.new_to_old[e.v]));
        }
    }

    #[test]
    fn composition_accounting(g in graph(9), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.n() >= 1);
        let (n, m) = (g.n(), g.edge_count());
        let v = pick.index(n);
        let d = duplicate_vertex(&g, v).unwrap();
        prop_assert_eq!((d.n(), d.edge_count()), (n + 1, m + g.degree(v) + 1));
        for e in g.edges() {
            let s = odd_subdivide(&g, &e).unwrap();
            prop_assert_eq!((s.n(), s.edge_count()), (n + 2, m + 2));
        }
        for p in split_partitions(&g, v).unwrap() {
            let s = split_vertex(&g, v, &p).unwrap();
            prop_assert_eq!((s.n(), s.edge_count()), (n + 2, m + 2));
        }
    }

    #[test]
    fn join_is_symmetric((g, g0) in with_subset(7), (h, h0) in with_subset(7)) {
        prop_assume!(g0.len() < g.n() && h0.len() < h.n());
        let cross = (g.n() - g0.len()) * (h.n() - h0.len());
        let q = JoinQuadruple::new(g.clone(), g0, h.clone(), h0).unwrap();
        let j = one_join(&q).unwrap();
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + cross);
        prop_assert!(is_isomorphic(&j, &one_join(&q.swapped()).unwrap()));
        prop_assert!(alpha_number(&j) <= alpha_number(&g) + alpha_number(&h));
    }
}

#[test]
fn edge_deletion_changes_alpha_by_at_most_one() {
    let g = Graph::petersen();
    let a = alpha_number(&g);
    for e in g.edges() {
        let b = alpha_number(&g.delete_edge(&e).unwrap());
        assert!(b == a || b == a + 1);
    }
    assert!(EdgeRef::new(3, 3).is_err());
}
