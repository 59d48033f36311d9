//! Property tests for the structural invariants: neighborhood and ball
//! identities, the Berge metric, variant collapse and monotonicity, the
//! shift bound, solver/oracle agreement, and witness validity.

use proptest::prelude::*;

use hyperdom::domination::{
    brute_force_oracle, min_dominating, satisfies, DominationVariant, SolveError,
};
use hyperdom::hypergraph::Hypergraph;
use hyperdom::rng::{random_isolate_free_k_uniform, XorShift64Star};
use hyperdom::tree::{radius_j_exact, spider};
use hyperdom::vertex_set::VertexSet;

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2..=9usize).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=n.min(4)), 1..=7)
            .prop_map(move |edges| {
                let lists: Vec<Vec<usize>> =
                    edges.into_iter().map(|s| s.into_iter().collect()).collect();
                Hypergraph::from_edge_lists(n, &lists).unwrap()
            })
    })
}

fn union_find_connected(h: &Hypergraph) -> bool {
    let n = h.n();
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for edge in h.edges() {
        let mut it = edge.iter();
        let first = it.next().unwrap();
        for v in it {
            let (a, b) = (find(&mut parent, first), find(&mut parent, v));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (1..n).all(|v| find(&mut parent, v) == root)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn neighborhood_identities(h in arb_hypergraph()) {
        for v in 0..h.n() {
            let nv = h.neighborhood(v);
            prop_assert!(nv.contains(v));
            prop_assert_eq!(nv, h.ball(v, 1));
        }
    }

    #[test]
    fn set_neighborhood_is_elementwise_union(h in arb_hypergraph(), raw in proptest::collection::btree_set(0..9usize, 0..5)) {
        let s = VertexSet::from_indices(h.n(), raw.into_iter().filter(|&v| v < h.n()));
        let mut expected = VertexSet::empty(h.n());
        for v in s.iter() {
            expected.union_with(&h.neighborhood(v));
        }
        prop_assert_eq!(h.neighborhood_of_set(&s), expected);
        prop_assert!(s.is_subset_of(&h.neighborhood_of_set(&s)) || s.is_empty());
    }

    #[test]
    fn berge_distance_is_a_metric_per_component(h in arb_hypergraph()) {
        let n = h.n();
        let table: Vec<Vec<Option<u32>>> = (0..n).map(|u| h.berge_distances(u)).collect();
        for u in 0..n {
            prop_assert_eq!(table[u][u], Some(0));
            for v in 0..n {
                prop_assert_eq!(table[u][v], table[v][u]);
                if let Some(duv) = table[u][v] {
                    prop_assert!((duv == 0) == (u == v));
                    for w in 0..n {
                        if let (Some(dvw), Some(duw)) = (table[v][w], table[u][w]) {
                            prop_assert!(duw <= duv + dvw);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn connectivity_matches_ball_and_union_find(h in arb_hypergraph()) {
        let n = h.n();
        let by_ball = h.ball(0, n as u32) == VertexSet::full(n);
        prop_assert_eq!(h.is_connected(), by_ball);
        prop_assert_eq!(h.is_connected(), union_find_connected(&h));
    }

    #[test]
    fn parameter_one_variants_collapse(h in arb_hypergraph()) {
        let baseline = min_dominating(&h, DominationVariant::Plain).unwrap();
        for variant in [
            DominationVariant::SDominating(1),
            DominationVariant::STuple(1),
            DominationVariant::Distance(1),
        ] {
            let res = min_dominating(&h, variant).unwrap();
            prop_assert_eq!(res.value, baseline.value, "{}", variant);
            prop_assert_eq!(&res.witness, &baseline.witness, "{}", variant);
        }
    }

    #[test]
    fn s_domination_at_most_s_tuple(h in arb_hypergraph(), s in 1..=3u32) {
        match min_dominating(&h, DominationVariant::STuple(s)) {
            Ok(tuple) => {
                let sdom = min_dominating(&h, DominationVariant::SDominating(s)).unwrap();
                prop_assert!(sdom.value <= tuple.value);
                // Shift bound: removing s-1 vertices from an s-tuple
                // dominating set leaves a 1-tuple dominating set.
                let plain = min_dominating(&h, DominationVariant::STuple(1)).unwrap();
                prop_assert!(tuple.value as i64 - (s as i64 - 1) >= plain.value as i64);
            }
            Err(SolveError::Infeasible { .. }) => {}
            Err(other) => return Err(TestCaseError::fail(other.to_string())),
        }
    }

    /// Adding an edge never increases any variant's minimum; this is the
    /// justification for enumerating only minimal covers in the extremal
    /// search, so a violation here must abort loudly.
    #[test]
    fn edge_insertion_is_monotone(h in arb_hypergraph(), raw_edge in proptest::collection::btree_set(0..9usize, 1..4), s in 1..=2u32) {
        let extra: Vec<usize> = raw_edge.into_iter().filter(|&v| v < h.n()).collect();
        prop_assume!(!extra.is_empty());
        let mut lists: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
        lists.push(extra);
        let larger = Hypergraph::from_edge_lists(h.n(), &lists).unwrap();
        for variant in [
            DominationVariant::Plain,
            DominationVariant::SDominating(s),
            DominationVariant::STuple(s),
            DominationVariant::Distance(s),
        ] {
            let before = min_dominating(&h, variant);
            let after = min_dominating(&larger, variant);
            match (before, after) {
                (Ok(b), Ok(a)) => prop_assert!(a.value <= b.value, "{}", variant),
                // Feasibility can only improve with more edges.
                (Err(SolveError::Infeasible { .. }), _) => {}
                (Ok(_), Err(e)) => return Err(TestCaseError::fail(e.to_string())),
                (Err(e), _) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn solver_agrees_with_oracle(seed in any::<u64>()) {
        let mut rng = XorShift64Star::new(seed);
        let n = rng.range(4, 13) as usize;
        let k = rng.range(2, 4.min(n as u64 - 1)) as usize;
        let extra = rng.range(0, 4) as usize;
        let h = random_isolate_free_k_uniform(&mut rng, n, k, extra);
        let p = rng.range(1, 4) as u32;
        for variant in [
            DominationVariant::Plain,
            DominationVariant::SDominating(p),
            DominationVariant::STuple(p),
            DominationVariant::Distance(p),
        ] {
            match (min_dominating(&h, variant), brute_force_oracle(&h, variant)) {
                (Ok(a), Ok(b)) => {
                    prop_assert_eq!(a.value, b.value, "{}", variant);
                    prop_assert_eq!(&a.witness, &b.witness, "{}", variant);
                    prop_assert!(satisfies(&h, &a.witness, variant));
                }
                (Err(SolveError::Infeasible { .. }), Err(SolveError::Infeasible { .. })) => {}
                (a, b) => return Err(TestCaseError::fail(format!("{a:?} vs {b:?}"))),
            }
        }
    }
}

/// The balanced spider on n vertices attains the lower end of the
/// j-radius sandwich exactly.
#[test]
fn balanced_spider_attains_floor() {
    for n in 3..=10usize {
        for j in 1..=3usize {
            if n < j + 2 {
                continue;
            }
            let legs: Vec<usize> = (1..=j + 1).map(|i| (n - 1 + (i - 1)) / (j + 1)).collect();
            let tree = spider(&legs);
            assert_eq!(tree.n(), n);
            assert_eq!(
                radius_j_exact(&tree, j).exc,
                (n / (j + 1)) as u32,
                "spider({legs:?}), j={j}"
            );
        }
    }
}
