//! Exhaustive extremal search at desk scale: the largest domination value
//! any k-uniform hypergraph on n vertices can reach, the smallest n
//! reaching a target, and the closed-form bound tables for report output.
//!
//! Search space reduction: adding an edge never increases any domination
//! variant, so the maximum over isolate-free hypergraphs is attained on
//! minimal covers (every edge keeps a private vertex), of which there are
//! few. The connected search widens each disconnected minimal cover by up
//! to two connector edges; completeness of that widening is checked
//! against a fully unpruned search at tiny sizes. Isomorphism pruning
//! canonicalizes by the minimum edge list over all vertex permutations,
//! which is feasible for n <= 9.

use std::collections::HashSet;

use thiserror::Error;

use crate::domination::{min_dominating_with, DominationVariant, SolveError, SolverConfig};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("C({n},{k}) = {count} candidate edges exceed the desk-scale guard {cap}")]
    TooManyEdges {
        n: usize,
        k: usize,
        count: u128,
        cap: u64,
    },
    #[error("unpruned reference search is capped at 21 candidate edges, got {count}")]
    TooManyEdgesUnpruned { count: u128 },
    #[error("invalid query: {0}")]
    BadQuery(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("no hypergraph on up to {max_n} vertices reaches the target")]
    NotFound { max_n: usize },
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Guard on C(n, k); larger spaces are refused rather than attempted.
    pub max_edge_candidates: u64,
    /// Budget on enumeration steps; exceeding it yields a result marked
    /// non-exhaustive, never a silent truncation.
    pub candidate_budget: u64,
    /// Upper end of the n sweep in `n_min`; defaults to k * gamma_target,
    /// which the disjoint-edges family always satisfies.
    pub max_n: Option<usize>,
    /// Collect every extremal witness class at the found order.
    pub collect_extremal: bool,
    pub solver: SolverConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_edge_candidates: 5000,
            candidate_budget: 10_000_000,
            max_n: None,
            collect_extremal: false,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalQuery {
    pub variant: DominationVariant,
    pub k: usize,
    pub gamma_target: usize,
    pub require_connected: bool,
}

#[derive(Clone, Debug)]
pub struct MaxDominationOutcome {
    pub max_value: usize,
    /// First candidate attaining the maximum, in enumeration order.
    pub witness: Hypergraph,
    /// Candidate families examined (before deduplication).
    pub raw_candidates: u64,
    /// Isomorphism classes actually solved.
    pub canonical_candidates: u64,
    /// False when the candidate budget ran out before exhaustion.
    pub exhaustive: bool,
    /// Whether permutation canonicalization was in effect (n <= 9).
    pub deduped: bool,
    /// Canonical representatives with value >= the requested threshold.
    pub reaching_target: Vec<Hypergraph>,
}

#[derive(Clone, Debug)]
pub struct RefutationEntry {
    pub n: usize,
    pub canonical_candidates: u64,
    pub raw_candidates: u64,
}

#[derive(Clone, Debug)]
pub struct ExtremalRecord {
    pub n_min: usize,
    pub witness: Hypergraph,
    pub refutations: Vec<RefutationEntry>,
    /// All extremal witness classes at n_min, when collection was on.
    pub extremal: Option<Vec<Hypergraph>>,
    pub exhaustive: bool,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Canonical form of an edge family: the lexicographically smallest sorted
/// bitmask list over all vertex permutations. Only defined for n <= 9.
pub fn canonical_form(n: usize, edges: &[VertexSet]) -> Vec<u16> {
    assert!(n <= 9, "permutation canonicalization is capped at n <= 9");
    let masks: Vec<u16> = edges
        .iter()
        .map(|e| e.iter().fold(0u16, |m, v| m | 1 << v))
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u16>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<u16> = masks
            .iter()
            .map(|&m| {
                let mut out = 0u16;
                for (v, &pv) in p.iter().enumerate() {
                    if m >> v & 1 == 1 {
                        out |= 1 << pv;
                    }
                }
                out
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
    });
    best.unwrap()
}

fn permute(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

fn hypergraph_from_masks(n: usize, masks: &[u16]) -> Hypergraph {
    let lists: Vec<Vec<usize>> = masks
        .iter()
        .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    Hypergraph::from_edge_lists(n, &lists).expect("canonical masks are valid edges")
}

fn family_is_connected(n: usize, edges: &[VertexSet]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for edge in edges {
        let mut it = edge.iter();
        let first = it.next().expect("edges are nonempty");
        for v in it {
            let (a, b) = (find(&mut parent, first), find(&mut parent, v));
            parent[a] = b;
        }
    }
    if n == 0 {
        return true;
    }
    let root = find(&mut parent, 0);
    (1..n).all(|v| find(&mut parent, v) == root)
}

struct Searcher<'a> {
    n: usize,
    variant: DominationVariant,
    require_connected: bool,
    target: usize,
    edges: &'a [VertexSet],
    cfg: &'a SearchConfig,
    steps: u64,
    exhausted_budget: bool,
    raw: u64,
    seen: HashSet<Vec<u16>>,
    solved: u64,
    best_value: usize,
    best_witness: Option<Hypergraph>,
    reaching: Vec<Hypergraph>,
    dedup: bool,
    error: Option<SolveError>,
}

impl Searcher<'_> {
    fn tick(&mut self) -> bool {
        self.steps += 1;
        if self.steps > self.cfg.candidate_budget {
            self.exhausted_budget = true;
            return false;
        }
        true
    }

    fn consider(&mut self, family: &[usize]) -> bool {
        let edge_sets: Vec<VertexSet> = family.iter().map(|&i| self.edges[i].clone()).collect();
        if !self.require_connected {
            return self.evaluate(&edge_sets);
        }
        if family_is_connected(self.n, &edge_sets) {
            return self.evaluate(&edge_sets);
        }
        // Widen with up to two connector edges.
        for c1 in 0..self.edges.len() {
            if family.contains(&c1) {
                continue;
            }
            if !self.tick() {
                return false;
            }
            let mut with_one = edge_sets.clone();
            with_one.push(self.edges[c1].clone());
            if family_is_connected(self.n, &with_one) {
                if !self.evaluate(&with_one) {
                    return false;
                }
                continue;
            }
            for c2 in c1 + 1..self.edges.len() {
                if family.contains(&c2) {
                    continue;
                }
                if !self.tick() {
                    return false;
                }
                let mut with_two = with_one.clone();
                with_two.push(self.edges[c2].clone());
                if family_is_connected(self.n, &with_two) && !self.evaluate(&with_two) {
                    return false;
                }
            }
        }
        true
    }

    fn evaluate(&mut self, edge_sets: &[VertexSet]) -> bool {
        self.raw += 1;
        if !self.tick() {
            return false;
        }
        let candidate = if self.dedup {
            let key = canonical_form(self.n, edge_sets);
            if !self.seen.insert(key.clone()) {
                return true;
            }
            hypergraph_from_masks(self.n, &key)
        } else {
            let lists: Vec<Vec<usize>> = edge_sets.iter().map(|e| e.to_vec()).collect();
            Hypergraph::from_edge_lists(self.n, &lists).expect("valid candidate")
        };
        self.solved += 1;
        let value = match min_dominating_with(&candidate, self.variant, &self.cfg.solver) {
            Ok(res) => res.value,
            Err(err) => {
                self.error = Some(err);
                return false;
            }
        };
        if value > self.best_value || self.best_witness.is_none() {
            self.best_value = value;
            self.best_witness = Some(candidate.clone());
        }
        if value >= self.target && self.cfg.collect_extremal {
            self.reaching.push(candidate);
        }
        true
    }
}

/// Maximum of the variant's domination number over all k-uniform
/// hypergraphs on `n` vertices without isolated vertices (connected ones
/// only, if required). `target` controls which witnesses are collected
/// when `cfg.collect_extremal` is set.
pub fn max_domination_over(
    n: usize,
    k: usize,
    variant: DominationVariant,
    require_connected: bool,
    target: usize,
    cfg: &SearchConfig,
) -> Result<MaxDominationOutcome, SearchError> {
    if k < 2 || n < k {
        return Err(SearchError::BadQuery(format!(
            "need 2 <= k <= n, got k={k}, n={n}"
        )));
    }
    let count = binomial(n as u128, k as u128);
    if count > cfg.max_edge_candidates as u128 {
        return Err(SearchError::TooManyEdges {
            n,
            k,
            count,
            cap: cfg.max_edge_candidates,
        });
    }
    let mut edges: Vec<VertexSet> = Vec::with_capacity(count as usize);
    crate::domination::for_each_combination(n, k, &mut |ix| {
        edges.push(VertexSet::from_indices(n, ix.iter().copied()));
        true
    });
    // suffix_union[i] = union of edges[i..]; prunes covers that can no
    // longer reach the uncovered vertices.
    let mut suffix_union = vec![VertexSet::empty(n); edges.len() + 1];
    for i in (0..edges.len()).rev() {
        suffix_union[i] = suffix_union[i + 1].union(&edges[i]);
    }

    let mut searcher = Searcher {
        n,
        variant,
        require_connected,
        target,
        edges: &edges,
        cfg,
        steps: 0,
        exhausted_budget: false,
        raw: 0,
        seen: HashSet::new(),
        solved: 0,
        best_value: 0,
        best_witness: None,
        reaching: Vec::new(),
        dedup: n <= 9,
        error: None,
    };

    // DFS over lexicographically sorted edge-index families; a family is
    // yielded when it covers every vertex, and never extended past that
    // point (supersets of a cover cannot keep a private vertex per edge).
    fn dfs(
        s: &mut Searcher<'_>,
        suffix_union: &[VertexSet],
        start: usize,
        family: &mut Vec<usize>,
        covered: &VertexSet,
        privates: &mut Vec<VertexSet>,
    ) -> bool {
        if covered.len() == s.n {
            return s.consider(family);
        }
        let full = VertexSet::full(s.n);
        let uncovered = full.difference(covered);
        for idx in start..s.edges.len() {
            if !s.tick() {
                return false;
            }
            if !uncovered.is_subset_of(&suffix_union[idx]) {
                // Later suffixes only shrink.
                return true;
            }
            let edge = &s.edges[idx];
            let own_private = edge.difference(covered);
            if own_private.is_empty() {
                continue;
            }
            // Adding this edge must not strip another edge's last private
            // vertex; private sets only shrink as the family grows.
            if privates.iter().any(|p| p.is_subset_of(edge)) {
                continue;
            }
            for p in privates.iter_mut() {
                p.difference_with(edge);
            }
            privates.push(own_private);
            family.push(idx);
            let next_covered = covered.union(edge);
            let keep_going = dfs(s, suffix_union, idx + 1, family, &next_covered, privates);
            family.pop();
            privates.pop();
            // Restore private sets.
            for (slot, &f) in family.iter().enumerate() {
                let mut p = s.edges[f].clone();
                for (other_slot, &g) in family.iter().enumerate() {
                    if other_slot != slot {
                        p.difference_with(&s.edges[g]);
                    }
                }
                privates[slot] = p;
            }
            if !keep_going {
                return false;
            }
        }
        true
    }

    let covered = VertexSet::empty(n);
    dfs(
        &mut searcher,
        &suffix_union,
        0,
        &mut Vec::new(),
        &covered,
        &mut Vec::new(),
    );
    if let Some(err) = searcher.error {
        return Err(err.into());
    }
    let witness = searcher
        .best_witness
        .ok_or_else(|| SearchError::BadQuery(format!("no k-uniform cover of {n} vertices")))?;
    Ok(MaxDominationOutcome {
        max_value: searcher.best_value,
        witness,
        raw_candidates: searcher.raw,
        canonical_candidates: searcher.solved,
        exhaustive: !searcher.exhausted_budget,
        deduped: searcher.dedup,
        reaching_target: searcher.reaching,
    })
}

/// Fully unpruned reference search: every nonempty subset of the candidate
/// edge set is checked directly. Exponential in C(n, k); used to validate
/// the minimal-cover reduction and the connector widening at tiny sizes.
pub fn max_domination_unpruned(
    n: usize,
    k: usize,
    variant: DominationVariant,
    require_connected: bool,
) -> Result<usize, SearchError> {
    let count = binomial(n as u128, k as u128);
    if count > 21 {
        return Err(SearchError::TooManyEdgesUnpruned { count });
    }
    let mut edges: Vec<VertexSet> = Vec::new();
    crate::domination::for_each_combination(n, k, &mut |ix| {
        edges.push(VertexSet::from_indices(n, ix.iter().copied()));
        true
    });
    let full = VertexSet::full(n);
    let mut best = 0usize;
    let solver = SolverConfig::default();
    for mask in 1u32..(1 << edges.len()) {
        let family: Vec<VertexSet> = (0..edges.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| edges[i].clone())
            .collect();
        let mut covered = VertexSet::empty(n);
        for e in &family {
            covered.union_with(e);
        }
        if covered != full {
            continue;
        }
        if require_connected && !family_is_connected(n, &family) {
            continue;
        }
        let lists: Vec<Vec<usize>> = family.iter().map(|e| e.to_vec()).collect();
        let h = Hypergraph::from_edge_lists(n, &lists).expect("valid");
        best = best.max(min_dominating_with(&h, variant, &solver)?.value);
    }
    Ok(best)
}

/// Smallest n whose maximum reaches the query target, with refutation
/// counts for every smaller n.
pub fn n_min(query: &ExtremalQuery, cfg: &SearchConfig) -> Result<ExtremalRecord, SearchError> {
    if query.gamma_target < 1 || query.k < 2 {
        return Err(SearchError::BadQuery(format!(
            "need gamma_target >= 1 and k >= 2, got {query:?}"
        )));
    }
    let max_n = cfg.max_n.unwrap_or(query.k * query.gamma_target);
    let mut refutations = Vec::new();
    let mut exhaustive = true;
    for n in query.k..=max_n {
        let outcome = max_domination_over(
            n,
            query.k,
            query.variant,
            query.require_connected,
            query.gamma_target,
            cfg,
        )?;
        exhaustive &= outcome.exhaustive;
        if outcome.max_value >= query.gamma_target {
            let extremal = cfg.collect_extremal.then_some(outcome.reaching_target);
            return Ok(ExtremalRecord {
                n_min: n,
                witness: outcome.witness,
                refutations,
                extremal,
                exhaustive,
            });
        }
        refutations.push(RefutationEntry {
            n,
            canonical_candidates: outcome.canonical_candidates,
            raw_candidates: outcome.raw_candidates,
        });
    }
    Err(SearchError::NotFound { max_n })
}

/// Exact rational for bound tables; denominator kept positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        Frac {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn int(value: i64) -> Self {
        Frac { num: value, den: 1 }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn cmp_int(self, value: i64) -> std::cmp::Ordering {
        (self.num).cmp(&(value * self.den))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::fmt::Display for Frac {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `f(k, gamma, l)`: the order of the distance construction family;
/// `l/2*k*gamma + max(k, gamma)` for even l, `(l+1)/2*k*gamma` for odd l.
pub fn f_value(k: u64, gamma: u64, l: u64) -> u64 {
    if l.is_multiple_of(2) {
        l / 2 * k * gamma + k.max(gamma)
    } else {
        l.div_ceil(2) * k * gamma
    }
}

/// Exact check of `k + k^(1-1/d) <= n`, via `(n-k)^d >= k^(d-1)`.
pub fn order_lower_holds(k: u64, d: u32, n: u64) -> bool {
    if n < k {
        return false;
    }
    (n - k)
        .checked_pow(d)
        .is_none_or(|lhs| lhs as u128 >= (k as u128).pow(d - 1))
}

/// Exact check of `n <= k + 4*k^(1-1/d)`, via `(n-k)^d <= 4^d * k^(d-1)`.
pub fn order_upper_holds(k: u64, d: u32, n: u64) -> bool {
    if n <= k {
        return true;
    }
    ((n - k) as u128).pow(d) <= 4u128.pow(d) * (k as u128).pow(d - 1)
}

/// One theorem instance in a bound report. `lower`/`upper` are exact
/// rationals where the bound is rational; the s-domination sandwich keeps
/// float approximations in the note and is checked exactly via
/// `order_lower_holds` / `order_upper_holds`.
#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub id: &'static str,
    pub relation: String,
    /// None = applicable; Some(reason) = hypothesis violated, not computed.
    pub inapplicable: Option<String>,
    pub lower: Option<Frac>,
    pub upper: Option<Frac>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub k: u64,
    pub gamma: u64,
    pub s: u64,
    pub l: u64,
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("id\tapplicable\tlower\tupper\trelation\tnote\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                e.id,
                if e.inapplicable.is_none() {
                    "yes"
                } else {
                    "no"
                },
                e.lower.map_or(String::from("-"), |f| f.to_string()),
                e.upper.map_or(String::from("-"), |f| f.to_string()),
                e.relation,
                e.inapplicable
                    .clone()
                    .or_else(|| e.note.clone())
                    .unwrap_or_default(),
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "gamma": self.gamma,
            "s": self.s,
            "l": self.l,
            "entries": self.entries.iter().map(|e| serde_json::json!({
                "id": e.id,
                "applicable": e.inapplicable.is_none(),
                "inapplicable_reason": e.inapplicable,
                "lower": e.lower.map(|f| f.to_string()),
                "upper": e.upper.map(|f| f.to_string()),
                "relation": e.relation,
                "note": e.note,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Closed-form bound table for the given parameters; each entry is marked
/// inapplicable (with the violated hypothesis) instead of being computed
/// outside its range.
pub fn theorem_bounds(k: u64, gamma: u64, s: u64, l: u64) -> BoundsReport {
    let mut entries = Vec::new();

    // Sandwich on the minimum order for s-domination targets.
    {
        let applicable = gamma >= 2 && s >= 1 && gamma > s;
        let d = if applicable {
            (gamma - s + 1) as u32
        } else {
            0
        };
        entries.push(BoundEntry {
            id: "s_domination_order",
            relation: format!(
                "k + k^(1-1/{0}) <= n_x(k,{gamma},{s}) <= n(k,{gamma},{s}) <= k + 4*k^(1-1/{0})",
                if applicable { d as u64 } else { 0 }
            ),
            inapplicable: (!applicable)
                .then(|| format!("needs gamma >= 2 and gamma > s >= 1, got gamma={gamma}, s={s}")),
            lower: None,
            upper: None,
            note: applicable.then(|| {
                let exp = 1.0 - 1.0 / d as f64;
                format!(
                    "approx lower {:.4}, approx upper {:.4}; exact checks via integer powers",
                    k as f64 + (k as f64).powf(exp),
                    k as f64 + 4.0 * (k as f64).powf(exp)
                )
            }),
        });
    }

    entries.push(BoundEntry {
        id: "f",
        relation: format!("f({k},{gamma},{l})"),
        inapplicable: (l < 1).then(|| "needs l >= 1".to_string()),
        lower: None,
        upper: (l >= 1).then(|| Frac::int(f_value(k, gamma, l) as i64)),
        note: None,
    });

    // Connected distance domination, two dominators.
    {
        let applicable = gamma == 2 && k >= 2 && l >= 2;
        let upper = if applicable {
            let a = ((2 * l + 1) * (k + 1)).div_ceil(2);
            let b = (l + 1) * k;
            Some(Frac::int(a.min(b) as i64))
        } else {
            None
        };
        entries.push(BoundEntry {
            id: "dist_conn_two",
            relation: format!("(2l+1)k/2 <= n_dc({k},2,{l}) <= min(ceil((2l+1)(k+1)/2), (l+1)k)"),
            inapplicable: (!applicable)
                .then(|| format!("needs gamma=2, k>=2, l>=2, got gamma={gamma}, l={l}")),
            lower: applicable.then(|| Frac::new(((2 * l + 1) * k) as i64, 2)),
            upper,
            note: None,
        });
    }

    // Connected distance domination, general gamma, long distances.
    {
        let applicable = k >= 2 && l >= 4 && gamma >= 3;
        entries.push(BoundEntry {
            id: "dist_conn_general",
            relation: format!(
                "k*ceil(((l-1)/2 - 1)*gamma) < n_dc({k},{gamma},{l}) <= f({k},{gamma},{l})"
            ),
            inapplicable: (!applicable)
                .then(|| format!("needs k>=2, l>=4, gamma>=3, got k={k}, l={l}, gamma={gamma}")),
            lower: applicable.then(|| Frac::int((k * ((l - 3) * gamma).div_ceil(2)) as i64)),
            upper: applicable.then(|| Frac::int(f_value(k, gamma, l) as i64)),
            note: applicable.then(|| "lower bound is strict".to_string()),
        });
    }

    // Connected distance domination at l = 2 and l = 3.
    {
        let applicable = gamma >= 3 && k >= 2 && l == 2;
        entries.push(BoundEntry {
            id: "dist_conn_l2",
            relation: format!("k*gamma <= n_dc({k},{gamma},2) <= k*gamma + max(k,gamma)"),
            inapplicable: (!applicable)
                .then(|| format!("needs gamma>=3 and l=2, got gamma={gamma}, l={l}")),
            lower: applicable.then(|| Frac::int((k * gamma) as i64)),
            upper: applicable.then(|| Frac::int((k * gamma + k.max(gamma)) as i64)),
            note: None,
        });
    }
    {
        let applicable = gamma >= 3 && k >= 2 && l == 3;
        entries.push(BoundEntry {
            id: "dist_conn_l3",
            relation: format!("k*gamma <= n_dc({k},{gamma},3) <= 2*k*gamma"),
            inapplicable: (!applicable)
                .then(|| format!("needs gamma>=3 and l=3, got gamma={gamma}, l={l}")),
            lower: applicable.then(|| Frac::int((k * gamma) as i64)),
            upper: applicable.then(|| Frac::int((2 * k * gamma) as i64)),
            note: None,
        });
    }

    // Coverage factor: any connected k-uniform hypergraph on n vertices
    // has distance-l domination number at most factor * n / k.
    {
        let applicable = l >= 2;
        let factor = if !applicable {
            None
        } else if l <= 4 {
            Some(Frac::int(1))
        } else {
            Some(Frac::new(2, (l - 3) as i64))
        };
        entries.push(BoundEntry {
            id: "coverage_factor",
            relation: "gamma_dc(H,l) <= factor * n/k, guarded below by 1".to_string(),
            inapplicable: (!applicable).then(|| format!("needs l >= 2, got {l}")),
            lower: None,
            upper: factor,
            note: applicable
                .then(|| "instance bound via coverage_upper_bound(n, k, l)".to_string()),
        });
    }

    BoundsReport {
        k,
        gamma,
        s,
        l,
        entries,
    }
}

/// Instance form of the coverage bound: `floor(n/k)` for l in {2,3,4},
/// `floor(2n / (k(l-3)))` for l > 4, guarded below by 1. The returned flag
/// reports when the guard fired (the raw bound fell under 1).
pub fn coverage_upper_bound(n: usize, k: usize, l: u32) -> (usize, bool) {
    assert!(l >= 2 && k >= 1);
    let raw = if l <= 4 {
        n / k
    } else {
        2 * n / (k * (l as usize - 3))
    };
    if raw < 1 {
        (1, true)
    } else {
        (raw, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::disjoint_edges;

    #[test]
    fn binomial_helper() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn max_domination_tiny_graphs() {
        let cfg = SearchConfig::default();
        // Every isolate-free graph on 3 vertices has a dominating vertex.
        let out = max_domination_over(3, 2, DominationVariant::Plain, false, 2, &cfg).unwrap();
        assert_eq!(out.max_value, 1);
        assert!(out.exhaustive);
        // Two disjoint edges reach 2 on 4 vertices.
        let out = max_domination_over(4, 2, DominationVariant::Plain, false, 2, &cfg).unwrap();
        assert_eq!(out.max_value, 2);
    }

    #[test]
    fn n_min_examples() {
        let cfg = SearchConfig::default();
        let record = n_min(
            &ExtremalQuery {
                variant: DominationVariant::Plain,
                k: 2,
                gamma_target: 2,
                require_connected: false,
            },
            &cfg,
        )
        .unwrap();
        assert_eq!(record.n_min, 4);
        assert_eq!(record.refutations.len(), 2); // n = 2, 3 refuted
        assert!(record.exhaustive);

        for k in [2usize, 3, 4] {
            let record = n_min(
                &ExtremalQuery {
                    variant: DominationVariant::Plain,
                    k,
                    gamma_target: 1,
                    require_connected: false,
                },
                &cfg,
            )
            .unwrap();
            assert_eq!(record.n_min, k, "n(k,1) = k");
        }
    }

    #[test]
    fn unique_extremal_witness_for_distance_two() {
        let cfg = SearchConfig {
            collect_extremal: true,
            ..SearchConfig::default()
        };
        let record = n_min(
            &ExtremalQuery {
                variant: DominationVariant::Distance(2),
                k: 2,
                gamma_target: 2,
                require_connected: false,
            },
            &cfg,
        )
        .unwrap();
        assert_eq!(record.n_min, 4);
        let extremal = record.extremal.unwrap();
        assert_eq!(extremal.len(), 1);
        let expected = disjoint_edges(2, 2).unwrap();
        assert_eq!(
            canonical_form(4, extremal[0].edges()),
            canonical_form(4, expected.edges())
        );
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        let a = Hypergraph::from_edge_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let b = Hypergraph::from_edge_lists(4, &[vec![0, 3], vec![1, 2]]).unwrap();
        let c = Hypergraph::from_edge_lists(4, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(canonical_form(4, a.edges()), canonical_form(4, b.edges()));
        assert_ne!(canonical_form(4, a.edges()), canonical_form(4, c.edges()));
    }

    #[test]
    fn connected_widening_matches_unpruned_reference() {
        for (n, k) in [(4usize, 2usize), (5, 2), (6, 2), (5, 3), (6, 3)] {
            for variant in [DominationVariant::Plain, DominationVariant::Distance(2)] {
                let reference = max_domination_unpruned(n, k, variant, true).unwrap();
                let cfg = SearchConfig::default();
                let widened = max_domination_over(n, k, variant, true, usize::MAX, &cfg).unwrap();
                assert_eq!(
                    widened.max_value, reference,
                    "connected max mismatch at n={n}, k={k}, {variant}"
                );
                let unrestricted = max_domination_unpruned(n, k, variant, false).unwrap();
                let pruned = max_domination_over(n, k, variant, false, usize::MAX, &cfg).unwrap();
                assert_eq!(pruned.max_value, unrestricted);
            }
        }
    }

    #[test]
    fn budget_marks_result_non_exhaustive() {
        let cfg = SearchConfig {
            candidate_budget: 3,
            ..SearchConfig::default()
        };
        let out = max_domination_over(4, 2, DominationVariant::Plain, false, 2, &cfg);
        // Either an explicit partial result or nothing found yet.
        if let Ok(out) = out {
            assert!(!out.exhaustive);
        }
    }

    #[test]
    fn bound_table_values() {
        assert_eq!(f_value(3, 3, 2), 12);
        assert_eq!(f_value(2, 2, 3), 8);

        let report = theorem_bounds(3, 2, 1, 2);
        let two = report
            .entries
            .iter()
            .find(|e| e.id == "dist_conn_two")
            .unwrap();
        assert!(two.inapplicable.is_none());
        assert_eq!(two.lower, Some(Frac::new(15, 2)));
        assert_eq!(two.upper, Some(Frac::int(9)));

        let general = report
            .entries
            .iter()
            .find(|e| e.id == "dist_conn_general")
            .unwrap();
        assert!(general.inapplicable.is_some());

        let report = theorem_bounds(4, 3, 1, 4);
        let general = report
            .entries
            .iter()
            .find(|e| e.id == "dist_conn_general")
            .unwrap();
        assert!(general.inapplicable.is_none());
        // k * ceil((l-3)*gamma/2) = 4 * ceil(3/2 * 3)... (l-3)*gamma = 3, ceil(3/2)=2
        assert_eq!(general.lower, Some(Frac::int(8)));
        assert_eq!(general.upper, Some(Frac::int(f_value(4, 3, 4) as i64)));

        let tsv = report.to_tsv();
        assert!(tsv.contains("dist_conn_general"));
        assert_eq!(report.to_json()["entries"].as_array().unwrap().len(), 7);
    }

    #[test]
    fn sandwich_checks_are_exact() {
        // k=5, d=2: lower holds for n=9 (16 >= 5), fails for n=7 (4 < 5).
        assert!(order_lower_holds(5, 2, 9));
        assert!(!order_lower_holds(5, 2, 7));
        assert!(order_upper_holds(5, 2, 9)); // 16 <= 80
        assert!(!order_upper_holds(5, 2, 100)); // 9025 > 80
    }

    #[test]
    fn coverage_bound_guard() {
        assert_eq!(coverage_upper_bound(12, 3, 2), (4, false));
        assert_eq!(coverage_upper_bound(12, 3, 8), (1, false)); // floor(24/15) = 1
        assert_eq!(coverage_upper_bound(3, 3, 20), (1, true)); // raw bound 0, guarded
        assert_eq!(coverage_upper_bound(30, 3, 7), (5, false));
    }
}
