//! Consistency between the exhaustive searches, the closed-form bound
//! tables, and the construction families.

use hyperdom::constructions::construction2_order;
use hyperdom::domination::{min_dominating, DominationVariant};
use hyperdom::extremal::{canonical_form, n_min, theorem_bounds, ExtremalQuery, SearchConfig};
use hyperdom::hypergraph::Hypergraph;
use hyperdom::rng::{random_isolate_free_k_uniform, XorShift64Star};

/// The connected minimum order for two distance-2 dominators at k = 2
/// lands between the closed-form bounds and below the spider family's
/// order, and the widened connected search finds it exhaustively.
#[test]
fn connected_distance_minimum_sits_inside_the_bounds() {
    let cfg = SearchConfig {
        max_n: Some(8),
        ..SearchConfig::default()
    };
    let record = n_min(
        &ExtremalQuery {
            variant: DominationVariant::Distance(2),
            k: 2,
            gamma_target: 2,
            require_connected: true,
        },
        &cfg,
    )
    .unwrap();
    assert!(record.exhaustive);
    assert_eq!(record.n_min, 6);
    assert!(record.witness.is_connected());
    assert_eq!(
        min_dominating(&record.witness, DominationVariant::Distance(2))
            .unwrap()
            .value,
        2
    );

    let report = theorem_bounds(2, 2, 1, 2);
    let entry = report
        .entries
        .iter()
        .find(|e| e.id == "dist_conn_two")
        .unwrap();
    assert!(entry.inapplicable.is_none());
    let lower = entry.lower.unwrap();
    let upper = entry.upper.unwrap();
    assert!(lower.cmp_int(record.n_min as i64).is_le());
    assert!(upper.cmp_int(record.n_min as i64).is_ge());

    // The spider family is a feasible witness, so it cannot undercut the
    // exhaustive minimum.
    assert!(record.n_min <= construction2_order(2, 2, 2));
}

/// Families with equal canonical form have equal domination values.
#[test]
fn canonical_form_preserves_domination_values() {
    let mut rng = XorShift64Star::new(21);
    for _ in 0..40 {
        let n = rng.range(4, 9) as usize;
        let k = rng.range(2, 4.min(n as u64 - 1)) as usize;
        let extra = rng.range(0, 3) as usize;
        let h = random_isolate_free_k_uniform(&mut rng, n, k, extra);
        let canon = canonical_form(n, h.edges());
        let lists: Vec<Vec<usize>> = canon
            .iter()
            .map(|&mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
            .collect();
        let rep = Hypergraph::from_edge_lists(n, &lists).unwrap();
        assert_eq!(canonical_form(n, rep.edges()), canon);
        for variant in [DominationVariant::Plain, DominationVariant::Distance(2)] {
            assert_eq!(
                min_dominating(&h, variant).unwrap().value,
                min_dominating(&rep, variant).unwrap().value,
                "canonicalization changed the value for {variant}"
            );
        }
    }
}
