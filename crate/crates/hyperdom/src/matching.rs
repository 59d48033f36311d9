//! Connected maximal matchings, the auxiliary graph on matching edges,
//! and the constructive distance-l dominating set built from them.
//!
//! The matching is grown so every new edge touches the already-explored
//! region; maximality then means every hyperedge meets some matching
//! edge, and two matching edges at auxiliary-graph distance r contain
//! vertices at Berge distance at most 1+2r. Together these give the
//! coverage guarantee `d(u, w) <= 2 + 2r` that the dominator uses.

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::tree::{radius_j_constructive, Tree};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("input hypergraph must be connected and nonempty")]
    Disconnected,
    #[error("distance parameter must be at least 2, got {0}")]
    DistanceTooSmall(u32),
    #[error("input hypergraph must be k-uniform")]
    NotUniform,
}

/// Sizes of the three edge classes after each growth step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchStep {
    pub matching: usize,
    pub intersecting: usize,
    pub remaining: usize,
}

/// A maximal matching grown edge by edge through the explored region;
/// selected edges are pairwise disjoint and every hyperedge meets one of
/// them.
#[derive(Clone, Debug)]
pub struct ConnectedMatching {
    pub edge_indices: Vec<usize>,
    pub history: Vec<MatchStep>,
}

/// Deterministic connected maximal matching: start from the lowest-index
/// edge; while untouched edges remain, add the lowest-index one that is
/// disjoint from the matching but meets an already-intersecting edge.
pub fn connected_maximal_matching(h: &Hypergraph) -> Result<ConnectedMatching, MatchingError> {
    if h.m() == 0 || !h.is_connected() {
        return Err(MatchingError::Disconnected);
    }
    #[derive(Clone, Copy, PartialEq)]
    enum Class {
        Matching,
        Intersecting,
        Remaining,
    }
    let m = h.m();
    let mut class = vec![Class::Remaining; m];
    let mut matching = Vec::new();
    let mut history = Vec::new();

    let absorb = |idx: usize, class: &mut Vec<Class>, matching: &mut Vec<usize>| {
        class[idx] = Class::Matching;
        matching.push(idx);
        for (other, cls) in class.iter_mut().enumerate() {
            if *cls == Class::Remaining && !h.edge(other).is_disjoint(h.edge(idx)) {
                *cls = Class::Intersecting;
            }
        }
    };

    absorb(0, &mut class, &mut matching);
    loop {
        let counts = |class: &[Class]| MatchStep {
            matching: class.iter().filter(|c| **c == Class::Matching).count(),
            intersecting: class.iter().filter(|c| **c == Class::Intersecting).count(),
            remaining: class.iter().filter(|c| **c == Class::Remaining).count(),
        };
        history.push(counts(&class));
        if class.iter().all(|c| *c != Class::Remaining) {
            break;
        }
        // Remaining edges are disjoint from every matching edge, so an
        // admissible one must meet an intersecting edge; connectivity
        // guarantees it exists.
        let next = (0..m)
            .find(|&idx| {
                class[idx] == Class::Remaining
                    && (0..m).any(|other| {
                        class[other] == Class::Intersecting
                            && !h.edge(idx).is_disjoint(h.edge(other))
                    })
            })
            .expect("connected hypergraph always has an admissible edge");
        absorb(next, &mut class, &mut matching);
    }

    debug_assert!(matching.iter().enumerate().all(|(a, &i)| matching[..a]
        .iter()
        .all(|&j| h.edge(i).is_disjoint(h.edge(j)))));
    Ok(ConnectedMatching {
        edge_indices: matching,
        history,
    })
}

/// Graph on matching indices, adjacent when some hyperedge meets both;
/// each auxiliary edge carries one witnessing hyperedge.
#[derive(Clone, Debug)]
pub struct AuxiliaryGraph {
    pub node_count: usize,
    /// `(i, j, witness)` with i < j: matching edges i and j both meet
    /// hyperedge `witness`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl AuxiliaryGraph {
    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.node_count];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// BFS spanning tree rooted at node 0; nodes map 1:1 to tree vertices.
    pub fn spanning_tree(&self) -> Tree {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut seen = vec![false; self.node_count];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut tree_edges = Vec::with_capacity(self.node_count.saturating_sub(1));
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    tree_edges.push((v, w));
                    queue.push_back(w);
                }
            }
        }
        Tree::new(self.node_count, &tree_edges).expect("auxiliary graph is connected")
    }
}

pub fn auxiliary_graph(h: &Hypergraph, matching: &ConnectedMatching) -> AuxiliaryGraph {
    let t = matching.edge_indices.len();
    let mut edges = Vec::new();
    let mut witness: Vec<Vec<Option<usize>>> = vec![vec![None; t]; t];
    for e in 0..h.m() {
        let touched: Vec<usize> = (0..t)
            .filter(|&i| !h.edge(matching.edge_indices[i]).is_disjoint(h.edge(e)))
            .collect();
        for a in 0..touched.len() {
            for b in a + 1..touched.len() {
                let (i, j) = (touched[a], touched[b]);
                if witness[i][j].is_none() {
                    witness[i][j] = Some(e);
                    edges.push((i, j, e));
                }
            }
        }
    }
    edges.sort_unstable();
    let aux = AuxiliaryGraph {
        node_count: t,
        edges,
    };
    debug_assert!(!h.is_connected() || aux.is_connected());
    aux
}

/// Constructive distance-l dominating set for a connected k-uniform
/// hypergraph.
///
/// For l in {2,3,4} one vertex per matching edge suffices: every vertex
/// lies in a hyperedge meeting some matching edge, at distance at most 2
/// from the chosen vertex. For l > 4 a spanning tree of the auxiliary
/// graph is covered by the smallest j whose constructive j-radius
/// witness reaches excentricity at most floor((l-2)/2), and one vertex is
/// taken from each selected matching edge; then
/// `d <= 2 + 2*floor((l-2)/2) <= l`. The output size never exceeds
/// `floor(n/k)` for l in {2,3,4} and `max(1, ceil(2t/(l-3)))` for l > 4.
pub fn distance_dominating_via_matching(
    h: &Hypergraph,
    l: u32,
) -> Result<VertexSet, MatchingError> {
    if l < 2 {
        return Err(MatchingError::DistanceTooSmall(l));
    }
    if h.uniform_k().is_none() {
        return Err(MatchingError::NotUniform);
    }
    let matching = connected_maximal_matching(h)?;
    let t = matching.edge_indices.len();

    let selected: Vec<usize> = if l <= 4 {
        (0..t).collect()
    } else {
        let aux = auxiliary_graph(h, &matching);
        let tree = aux.spanning_tree();
        let target = (l - 2) / 2;
        let mut chosen = None;
        for j in 1..=t {
            let witness = radius_j_constructive(&tree, j);
            if witness.exc <= target {
                chosen = Some(witness.vertices);
                break;
            }
        }
        chosen.expect("j = t reaches excentricity 0")
    };

    let mut out = VertexSet::empty(h.n());
    for &node in &selected {
        let edge = h.edge(matching.edge_indices[node]);
        out.insert(edge.first().expect("edges are nonempty"));
    }
    debug_assert!(crate::domination::is_distance_dominating(h, &out, l));
    Ok(out)
}

/// Size bound the dominator satisfies, with the guard for bounds below 1.
pub fn dominator_size_bound(n: usize, k: usize, t: usize, l: u32) -> usize {
    if l <= 4 {
        n / k
    } else {
        (2 * t).div_ceil(l as usize - 3).max(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construction1, disjoint_edges};
    use crate::domination::{brute_force_oracle, is_distance_dominating, DominationVariant};
    use crate::rng::{random_connected_k_uniform, XorShift64Star};

    fn h(n: usize, lists: &[Vec<usize>]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, lists).unwrap()
    }

    #[test]
    fn matching_on_single_and_overlapping_edges() {
        let single = h(3, &[vec![0, 1, 2]]);
        let m = connected_maximal_matching(&single).unwrap();
        assert_eq!(m.edge_indices, vec![0]);

        let overlapping = h(4, &[vec![0, 1, 2], vec![2, 3, 0]]);
        let m = connected_maximal_matching(&overlapping).unwrap();
        assert_eq!(m.edge_indices, vec![0]);
        assert_eq!(m.history.last().unwrap().intersecting, 1);
    }

    #[test]
    fn matching_on_edge_chain() {
        // E1 meets E2, E2 meets E3, E1 and E3 disjoint.
        let chain = h(6, &[vec![0, 1], vec![1, 2, 3], vec![3, 4, 5]]);
        let m = connected_maximal_matching(&chain).unwrap();
        assert_eq!(m.edge_indices, vec![0, 2]);
        let aux = auxiliary_graph(&chain, &m);
        assert_eq!(aux.edges, vec![(0, 1, 1)]);
        assert!(aux.is_connected());
    }

    #[test]
    fn matching_rejects_disconnected_input() {
        let g = disjoint_edges(2, 2).unwrap();
        assert_eq!(
            connected_maximal_matching(&g).unwrap_err(),
            MatchingError::Disconnected
        );
        assert_eq!(
            distance_dominating_via_matching(&g, 2).unwrap_err(),
            MatchingError::Disconnected
        );
    }

    #[test]
    fn aux_graph_trivial_for_single_matching_edge() {
        let single = h(3, &[vec![0, 1, 2]]);
        let m = connected_maximal_matching(&single).unwrap();
        let aux = auxiliary_graph(&single, &m);
        assert_eq!(aux.node_count, 1);
        assert!(aux.edges.is_empty());
        assert!(aux.is_connected());
    }

    #[test]
    fn dominator_on_single_edge_and_chain_family() {
        let single = h(4, &[vec![0, 1, 2, 3]]);
        for l in 2..=6 {
            let d = distance_dominating_via_matching(&single, l).unwrap();
            assert_eq!(d.len(), 1);
        }

        let g = construction1(3, 2, 2).unwrap();
        let m = connected_maximal_matching(&g).unwrap();
        assert!(auxiliary_graph(&g, &m).is_connected());
        let d = distance_dominating_via_matching(&g, 2).unwrap();
        assert!(is_distance_dominating(&g, &d, 2));
        assert!(d.len() <= g.n() / 3);
        let exact = brute_force_oracle(&g, DominationVariant::Distance(2)).unwrap();
        assert_eq!(exact.value, 2);
        assert!(exact.value <= d.len());
    }

    #[test]
    fn maximality_means_every_edge_is_met() {
        let mut rng = XorShift64Star::new(5);
        for _ in 0..30 {
            let n = rng.range(6, 28) as usize;
            let k = rng.range(2, 5.min(n as u64 / 2)) as usize;
            let g = random_connected_k_uniform(&mut rng, n, k, 3);
            let m = connected_maximal_matching(&g).unwrap();
            for e in 0..g.m() {
                assert!(
                    m.edge_indices
                        .iter()
                        .any(|&i| !g.edge(i).is_disjoint(g.edge(e))),
                    "edge {e} met no matching edge"
                );
            }
            assert!(m.history.last().unwrap().remaining == 0);
        }
    }

    /// Matching edges at auxiliary distance r hold vertex pairs at Berge
    /// distance at most 1 + 2r.
    #[test]
    fn distance_transfer_through_matching() {
        let mut rng = XorShift64Star::new(9);
        for _ in 0..20 {
            let n = rng.range(8, 30) as usize;
            let k = rng.range(2, 4) as usize;
            let g = random_connected_k_uniform(&mut rng, n, k, 2);
            let m = connected_maximal_matching(&g).unwrap();
            let aux = auxiliary_graph(&g, &m);
            let t = m.edge_indices.len();
            // Auxiliary-graph distances by BFS.
            let mut adj = vec![Vec::new(); t];
            for &(i, j, _) in &aux.edges {
                adj[i].push(j);
                adj[j].push(i);
            }
            for start in 0..t {
                let mut dist = vec![u32::MAX; t];
                dist[start] = 0;
                let mut queue = std::collections::VecDeque::from([start]);
                while let Some(v) = queue.pop_front() {
                    for &w in &adj[v] {
                        if dist[w] == u32::MAX {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                for other in 0..t {
                    let r = dist[other];
                    assert_ne!(r, u32::MAX);
                    for u in g.edge(m.edge_indices[start]).iter() {
                        let berge = g.berge_distances(u);
                        for v in g.edge(m.edge_indices[other]).iter() {
                            assert!(berge[v].unwrap() <= 1 + 2 * r);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn size_bound_arithmetic_matches_radius_target() {
        // The smallest j with ceil(t/(j+1)) <= floor((l-2)/2) never exceeds
        // max(1, ceil(2t/(l-3))), for both parities of l.
        for t in 1..=10_000usize {
            for l in 5..=100u32 {
                let target = ((l - 2) / 2) as usize;
                let j0 = (1..=t).find(|&j| t.div_ceil(j + 1) <= target).unwrap_or(t);
                assert!(
                    j0 <= dominator_size_bound(usize::MAX, 1, t, l),
                    "t={t} l={l} j0={j0}"
                );
            }
        }
    }
}
