mod common;

use balance_lab::generate::{complete, cycle};
use balance_lab::io::{parse_graph6, write_graph6};
use common::{edge_list, encode_graph6};

#[test]
fn encoder_oracle_on_small_graphs() {
    assert_eq!(encode_graph6(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), "C~");
    assert_eq!(encode_graph6(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]), "Dhc");
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    assert_eq!(encode_graph6(5, &k5), "D~{");
}

#[test]
fn known_strings() {
    assert_eq!(write_graph6(&complete(4).unwrap()), "C~");
    assert_eq!(write_graph6(&cycle(5).unwrap()), "Dhc");
    assert_eq!(write_graph6(&complete(5).unwrap()), "D~{");
    let c5 = parse_graph6("Dhc").unwrap();
    assert_eq!(edge_list(&c5), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
}

#[test]
fn writer_matches_encoder_on_corpora() {
    for g in common::cubic_corpus().into_iter().chain(common::four_regular_corpus()).chain(common::gnp_corpus()) {
        if g.graph.n() < 63 {
            assert_eq!(write_graph6(&g.graph), encode_graph6(g.graph.n(), &edge_list(&g.graph)), "{}", g.name);
        }
    }
}
