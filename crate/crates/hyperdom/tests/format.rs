//! Text and JSON format round trips, including the label comments.

use proptest::prelude::*;

use hyperdom::hypergraph::{Hypergraph, HypergraphError};

#[test]
fn golden_text_format() {
    let mut h = Hypergraph::from_edge_lists(5, &[vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    h.set_label(2, "hub");
    assert_eq!(h.to_text(), "5 2\n# label 2 hub\n0 1 2\n2 3 4\n");
}

#[test]
fn parser_accepts_interleaved_comments_and_blank_lines() {
    let text = "# generated example\n4 2\n\n0 1\n# label 3 tail\n2 3\n";
    let h = Hypergraph::from_text(text).unwrap();
    assert_eq!(h.n(), 4);
    assert_eq!(h.m(), 2);
    assert_eq!(h.label(3), Some("tail"));
}

#[test]
fn parser_rejects_malformed_inputs() {
    for bad in [
        "",
        "2\n0 1\n",
        "3 1\n0 4\n",
        "3 2\n0 1\n",
        "3 1\n0 x\n",
        "3 1 9\n0 1\n",
    ] {
        assert!(
            matches!(
                Hypergraph::from_text(bad),
                Err(HypergraphError::Parse { .. } | HypergraphError::VertexOutOfRange { .. })
            ),
            "accepted {bad:?}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(n in 1..=12usize, raw in proptest::collection::vec(proptest::collection::btree_set(0..12usize, 1..5), 1..6)) {
        let lists: Vec<Vec<usize>> = raw
            .into_iter()
            .map(|s| s.into_iter().map(|v| v % n).collect::<std::collections::BTreeSet<_>>().into_iter().collect())
            .collect();
        let mut h = Hypergraph::from_edge_lists(n, &lists).unwrap();
        if n > 2 {
            h.set_label(n - 1, "b_1");
            h.set_label(0, "A_1#0");
        }
        let text = h.to_text();
        let back = Hypergraph::from_text(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(back.to_text(), text);
        // JSON mirrors the same content.
        let json = h.to_json();
        prop_assert_eq!(json["n"].as_u64().unwrap() as usize, h.n());
        prop_assert_eq!(json["m"].as_u64().unwrap() as usize, h.m());
        prop_assert_eq!(json["edges"].as_array().unwrap().len(), h.m());
    }
}
