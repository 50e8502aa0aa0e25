use expander_extract::coloring::{lift, VertexColoredGraph};
use expander_extract::multigraph::{cheeger_constant, vol_monotone_check};
use expander_extract::oracle::{brute_force_cheeger, brute_force_expansion, subdivide_with_lengths, DEFAULT_CAP};
use expander_extract::{MultiGraph, Rational, VertexId, VertexSubset};
use proptest::prelude::*;

/// Multigraphs on `0..n` (all vertices present), loops and parallels allowed.
fn multigraph(max_n: u32, max_edges: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |edges| {
            let mut g = MultiGraph::new();
            for v in 0..n {
                g.add_vertex(VertexId(v));
            }
            for (u, v) in edges {
                g.add_edge(VertexId(u), VertexId(v));
            }
            g
        })
    })
}

fn subset_from_mask(g: &MultiGraph, mask: u64) -> VertexSubset {
    g.vertices().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).collect()
}

/// A base multigraph with every edge subdivided `0..=3` times, blue vertices marked.
fn colored() -> impl Strategy<Value = (VertexColoredGraph, MultiGraph)> {
    multigraph(6, 10).prop_flat_map(|base| {
        let e = base.edge_count();
        (Just(base), prop::collection::vec(1u32..=4, e))
    })
    .prop_map(|(base, lengths)| {
        let (g, paths) = subdivide_with_lengths(&base, &lengths);
        let blue: VertexSubset = paths.iter().flat_map(|p| p[1..p.len() - 1].iter().copied()).collect();
        (VertexColoredGraph::new(g, blue).unwrap(), base)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degrees_sum_to_twice_the_edges(g in multigraph(10, 30)) {
        let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        prop_assert_eq!(g.volume(&g.vertex_set()).unwrap(), 2 * g.edge_count());
    }

    #[test]
    fn expansion_is_symmetric(g in multigraph(8, 20), mask in any::<u64>()) {
        let x = subset_from_mask(&g, mask);
        let rest = x.complement_in(&g);
        if let (Ok(a), Ok(b)) = (g.edge_expansion(&x), g.edge_expansion(&rest)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn cheeger_matches_brute_force(g in multigraph(8, 18)) {
        prop_assume!(g.vertex_count() >= 2);
        let (fast, cert) = cheeger_constant(&g).unwrap();
        let (slow, _) = brute_force_cheeger(&g, DEFAULT_CAP).unwrap();
        prop_assert_eq!(fast, slow);
        prop_assert_eq!(brute_force_expansion(&g, &cert.witness_set).unwrap(), fast);
    }

    #[test]
    fn red_equals_smoothing_in_any_order((vc, base) in colored(), seed in any::<u64>()) {
        let mut order: Vec<VertexId> = vc.blue_vertices().iter().collect();
        // a seeded rotation plus reversal gives varied smoothing orders
        if !order.is_empty() {
            let k = (seed as usize) % order.len();
            order.rotate_left(k);
            if seed & 1 == 1 {
                order.reverse();
            }
        }
        let mut g = vc.graph().clone();
        for v in order {
            g = g.smooth_vertex(v).unwrap();
        }
        prop_assert_eq!(&g, &vc.red());
        prop_assert_eq!(g, base);
    }

    #[test]
    fn smoothing_keeps_edges_minus_vertices((vc, _) in colored()) {
        let g = vc.graph();
        let invariant = g.edge_count() as i64 - g.vertex_count() as i64;
        for v in vc.blue_vertices().iter() {
            let s = g.smooth_vertex(v).unwrap();
            prop_assert_eq!(s.edge_count() as i64 - s.vertex_count() as i64, invariant);
        }
    }

    #[test]
    fn lift_round_trip((vc, base) in colored(), mask in any::<u64>()) {
        let keep = subset_from_mask(&base, mask);
        let lifted = lift(&vc, &keep).unwrap();
        prop_assert_eq!(lifted.red(), vc.red().induced_subgraph(&keep).unwrap());
        prop_assert!(lifted.graph().is_induced_subgraph_of(vc.graph()));
    }

    #[test]
    fn smaller_side_stays_smaller_in_host(g in multigraph(6, 14)) {
        let n = g.vertex_count();
        for s_mask in 0u64..(1 << n) {
            let sub = subset_from_mask(&g, s_mask);
            // every X inside S
            let mut x_mask = s_mask;
            loop {
                let x = subset_from_mask(&g, x_mask);
                prop_assert!(vol_monotone_check(&g, &sub, &x).unwrap());
                if x_mask == 0 {
                    break;
                }
                x_mask = (x_mask - 1) & s_mask;
            }
        }
    }
}

#[test]
fn known_values() {
    let k4 = MultiGraph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    assert_eq!(brute_force_cheeger(&k4, DEFAULT_CAP).unwrap().0, Rational::new(2, 3));
    assert_eq!(cheeger_constant(&k4).unwrap().0, Rational::new(2, 3));
}
