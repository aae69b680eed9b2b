mod common;

use balance_lab::balance::{
    balance_counts, decide_balanceable_oracle, decide_simply_balanceable_oracle, essentially_half, verify_certificate,
};
use balance_lab::construct::join_certificates;
use balance_lab::generate::complete;
use balance_lab::io::{parse_graph6, write_graph6};
use balance_lab::search::{brooks_coloring, max_independent_set};
use balance_lab::{BalanceCertificate, Graph, Status, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_subset(g: &Graph, bits: &[bool]) -> VertexSet {
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| bits[v]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let s = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
        prop_assert_eq!(s, common::encode_graph6(g.n(), &common::edge_list(&g)));
    }

    #[test]
    fn handshake(g in arb_graph(30)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn counts_partition_edges(g in arb_graph(20), bits in proptest::collection::vec(any::<bool>(), 20)) {
        let x = arb_subset(&g, &bits);
        let c = balance_counts(&g, &x);
        prop_assert_eq!(c.total(), g.m());
        prop_assert_eq!(c.cut, g.edges_between(&x, &x.complement()));
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(30)) {
        let comps = g.components();
        let mut seen = VertexSet::empty(g.n());
        for c in &comps {
            prop_assert!(seen.is_disjoint(c));
            prop_assert!(g.is_connected_within(c));
            seen.union_with(c);
        }
        prop_assert_eq!(seen.len(), g.n());
        let within: usize = comps.iter().map(|c| g.edges_within(c)).sum();
        prop_assert_eq!(within, g.m());
    }

    #[test]
    fn line_graph_degrees(g in arb_graph(14)) {
        let l = g.line_graph();
        prop_assert_eq!(l.graph.n(), g.m());
        for (i, &(u, v)) in l.edges.iter().enumerate() {
            prop_assert_eq!(l.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn product_counts(g in arb_graph(10), h in arb_graph(5)) {
        let p = g.cartesian_product(&h);
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.m(), g.n() * h.m() + h.n() * g.m());
    }

    #[test]
    fn oracles_agree_with_brute_force(g in arb_graph(11)) {
        let b = decide_balanceable_oracle(&g, 28).unwrap();
        let sb = decide_simply_balanceable_oracle(&g, 28).unwrap();
        prop_assert_eq!(b.status == Status::Holds, common::brute_balanceable(&g));
        prop_assert_eq!(sb.status == Status::Holds, common::brute_simply_balanceable(&g));
        if sb.status == Status::Holds {
            prop_assert_eq!(b.status, Status::Holds);
        }
        for v in [&b, &sb] {
            if let Some(c) = &v.certificate {
                prop_assert!(verify_certificate(&g, c).unwrap().valid);
            }
        }
    }

    #[test]
    fn brooks_is_proper(g in arb_graph(16)) {
        let c = brooks_coloring(&g).unwrap();
        prop_assert!(common::proper(&g, c.colors()));
        let mis = max_independent_set(&g).unwrap();
        prop_assert!(g.is_independent(&mis));
        prop_assert!(mis.len() >= c.largest_class().len());
    }

    #[test]
    fn join_preserves_certificates(
        seed_g in 0u64..1000, seed_h in 0u64..1000, ng in 4usize..9, nh in 4usize..9,
    ) {
        let g = common::gnp(ng, 0.5, seed_g);
        let h = common::gnp(nh, 0.5, seed_h);
        prop_assume!(h.m().is_multiple_of(2));
        let cg = decide_balanceable_oracle(&g, 28).unwrap().certificate;
        let ch = decide_balanceable_oracle(&h, 28).unwrap().certificate;
        if let (Some(cg), Some(ch)) = (cg, ch) {
            let joined = join_certificates(&g, &cg, &h, &ch).unwrap();
            let u = Graph::disjoint_union(&[g.clone(), h.clone()]);
            prop_assert!(verify_certificate(&u, &joined).unwrap().valid);
        }
    }
}

#[test]
fn essentially_half_values() {
    assert!(essentially_half(3, 7) && essentially_half(4, 7) && !essentially_half(5, 7));
    assert!(essentially_half(4, 8) && !essentially_half(3, 8));
}

#[test]
fn pull_back_through_induced_subgraph() {
    let k4 = complete(4).unwrap();
    let g = Graph::disjoint_union(&[k4.clone(), k4]);
    let keep = VertexSet::from_vertices(8, [4, 5, 6, 7]);
    let sub = g.induced_subgraph(&keep);
    let cert = BalanceCertificate::SimplyBalanced { independent: VertexSet::from_vertices(4, [1]) };
    let back = cert.pull_back(&sub.original, 8);
    assert_eq!(back, BalanceCertificate::SimplyBalanced { independent: VertexSet::from_vertices(8, [5]) });
}
