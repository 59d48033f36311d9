//! Domination predicates and exact minimizers for the four variants:
//! plain, s-dominating, s-tuple dominating, and distance-l dominating.
//!
//! The exact solver runs branch and bound on the equivalent multicover
//! problem: every vertex `v` carries a demand (1, or `s`), a chosen vertex
//! `d` satisfies one unit of `v`'s demand whenever `v` lies in `d`'s cover
//! set (`N_d`, or `B_l(d)`), and under the s-dominating rule choosing `v`
//! itself waives `v`'s whole demand, since the definition exempts members
//! of the dominating set. [`brute_force_oracle`] is an independent
//! plain-enumeration check that must agree with the solver wherever both
//! complete.

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Which domination quantity to compute; the parameter is `s` or `l`.
///
/// `Plain`, `SDominating(1)`, `STuple(1)` and `Distance(1)` all coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominationVariant {
    Plain,
    SDominating(u32),
    STuple(u32),
    Distance(u32),
}

impl DominationVariant {
    pub fn parameter(&self) -> u32 {
        match self {
            DominationVariant::Plain => 1,
            DominationVariant::SDominating(s) | DominationVariant::STuple(s) => *s,
            DominationVariant::Distance(l) => *l,
        }
    }

    fn validate(&self) {
        assert!(self.parameter() >= 1, "variant parameter must be >= 1");
    }

    /// Per-vertex demand in the multicover formulation.
    fn demand(&self) -> u32 {
        match self {
            DominationVariant::Plain | DominationVariant::Distance(_) => 1,
            DominationVariant::SDominating(s) | DominationVariant::STuple(s) => *s,
        }
    }

    fn waives_own_demand(&self) -> bool {
        matches!(self, DominationVariant::SDominating(_))
    }
}

impl std::fmt::Display for DominationVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DominationVariant::Plain => write!(f, "plain"),
            DominationVariant::SDominating(s) => write!(f, "sdom({s})"),
            DominationVariant::STuple(s) => write!(f, "stuple({s})"),
            DominationVariant::Distance(l) => write!(f, "dist({l})"),
        }
    }
}

/// `D` dominates iff `N(D) = V`.
pub fn is_dominating(h: &Hypergraph, d: &VertexSet) -> bool {
    h.neighborhood_of_set(d) == VertexSet::full(h.n())
}

/// Every vertex outside `D` sees at least `s` members of `D` in its closed
/// neighborhood; members of `D` are exempt.
pub fn is_s_dominating(h: &Hypergraph, d: &VertexSet, s: u32) -> bool {
    assert!(s >= 1);
    (0..h.n()).all(|v| d.contains(v) || h.neighborhood(v).intersects_at_least(d, s as usize))
}

/// Every vertex, including members of `D`, sees at least `s` members of `D`.
pub fn is_s_tuple_dominating(h: &Hypergraph, d: &VertexSet, s: u32) -> bool {
    assert!(s >= 1);
    (0..h.n()).all(|v| h.neighborhood(v).intersects_at_least(d, s as usize))
}

/// The balls of radius `l` around `D` cover every vertex.
pub fn is_distance_dominating(h: &Hypergraph, d: &VertexSet, l: u32) -> bool {
    assert!(l >= 1);
    if h.n() == 0 {
        return true;
    }
    if d.is_empty() {
        return false;
    }
    let dist = h.multi_source_distances(d.iter());
    dist.iter().all(|o| matches!(o, Some(x) if *x <= l))
}

pub fn satisfies(h: &Hypergraph, d: &VertexSet, variant: DominationVariant) -> bool {
    match variant {
        DominationVariant::Plain => is_dominating(h, d),
        DominationVariant::SDominating(s) => is_s_dominating(h, d, s),
        DominationVariant::STuple(s) => is_s_tuple_dominating(h, d, s),
        DominationVariant::Distance(l) => is_distance_dominating(h, d, l),
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    /// The node budget ran out before the search was exhausted. This is an
    /// explicit outcome, never a silently unverified minimum.
    #[error("node budget exhausted after {nodes_explored} nodes")]
    BudgetExhausted { nodes_explored: u64 },
    /// No set of any size satisfies the variant (s-tuple with a vertex of
    /// closed neighborhood smaller than s).
    #[error("no feasible set exists: vertex {vertex} has |N_v| = {neighborhood} < {required}")]
    Infeasible {
        vertex: usize,
        neighborhood: usize,
        required: usize,
    },
}

/// Exact outcome of a minimization, with the lexicographically smallest
/// witness of minimum size.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        // Large enough for every desk-scale instance; overflowing it is
        // reported, not truncated.
        SolverConfig {
            node_budget: 100_000_000,
        }
    }
}

/// Precomputed cover structure shared by the solver, the oracle and the
/// greedy bound. For the distance variant all balls are computed once up
/// front (n BFS runs).
pub struct DominationContext<'h> {
    h: &'h Hypergraph,
    variant: DominationVariant,
    /// `cover[v]` = vertices whose choice satisfies one unit of v's demand
    /// (equals the set of vertices v's choice would cover, by symmetry).
    cover: Vec<VertexSet>,
    base_demand: u32,
}

impl<'h> DominationContext<'h> {
    pub fn new(h: &'h Hypergraph, variant: DominationVariant) -> Self {
        variant.validate();
        let cover: Vec<VertexSet> = match variant {
            DominationVariant::Distance(l) => (0..h.n()).map(|v| h.ball(v, l)).collect(),
            _ => (0..h.n()).map(|v| h.neighborhood(v)).collect(),
        };
        DominationContext {
            h,
            variant,
            cover,
            base_demand: variant.demand(),
        }
    }

    pub fn cover_sets(&self) -> &[VertexSet] {
        &self.cover
    }

    /// Predicate evaluation against the precomputed cover sets.
    pub fn satisfied_by(&self, d: &VertexSet) -> bool {
        let s = self.base_demand as usize;
        let exempt = self.variant.waives_own_demand();
        (0..self.h.n())
            .all(|v| (exempt && d.contains(v)) || self.cover[v].intersects_at_least(d, s))
    }

    /// Err when even the full vertex set cannot satisfy some vertex.
    fn check_feasible(&self) -> Result<(), SolveError> {
        if matches!(self.variant, DominationVariant::STuple(_)) {
            let s = self.base_demand as usize;
            for v in 0..self.h.n() {
                if self.cover[v].len() < s {
                    return Err(SolveError::Infeasible {
                        vertex: v,
                        neighborhood: self.cover[v].len(),
                        required: s,
                    });
                }
            }
        }
        Ok(())
    }

    fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if !matches!(self.variant, DominationVariant::Distance(_)) && self.h.has_isolated_vertices()
        {
            w.push(
                "hypergraph has isolated vertices; each is forced into every solution".to_string(),
            );
        }
        w
    }
}

struct MulticoverState {
    demand: Vec<u32>,
    residual: u64,
    /// Vertices with positive residual demand, as a set (for fast gains).
    pending: VertexSet,
}

impl MulticoverState {
    fn new(ctx: &DominationContext<'_>) -> Self {
        let n = ctx.h.n();
        let demand = vec![ctx.base_demand; n];
        MulticoverState {
            residual: ctx.base_demand as u64 * n as u64,
            demand,
            pending: VertexSet::full(n),
        }
    }

    fn choose(&mut self, ctx: &DominationContext<'_>, c: usize) {
        if ctx.variant.waives_own_demand() && self.demand[c] > 0 {
            self.residual -= self.demand[c] as u64;
            self.demand[c] = 0;
            self.pending.remove(c);
        }
        for v in ctx.cover[c].iter() {
            if self.demand[v] > 0 {
                self.demand[v] -= 1;
                self.residual -= 1;
                if self.demand[v] == 0 {
                    self.pending.remove(v);
                }
            }
        }
    }

    /// Demand units a single further choice of `c` could satisfy.
    fn gain(&self, ctx: &DominationContext<'_>, c: usize) -> u64 {
        let mut g = ctx.cover[c].intersection_size(&self.pending) as u64;
        if ctx.variant.waives_own_demand() && self.demand[c] > 0 {
            // Choosing c waives its whole residual demand rather than the
            // single unit counted above.
            g += self.demand[c] as u64 - 1;
        }
        g
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

struct BranchSearch<'c, 'h> {
    ctx: &'c DominationContext<'h>,
    nodes: u64,
    budget: u64,
    best: usize,
}

impl BranchSearch<'_, '_> {
    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExhausted {
                nodes_explored: self.nodes,
            });
        }
        Ok(())
    }

    /// Greedy-relaxation lower bound: no single choice satisfies more than
    /// max-gain units of residual demand.
    fn lower_bound(&self, state: &MulticoverState, available: &VertexSet) -> u64 {
        if state.residual == 0 {
            return 0;
        }
        let max_gain = available
            .iter()
            .map(|c| state.gain(self.ctx, c))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return u64::MAX;
        }
        ceil_div(state.residual, max_gain)
    }

    fn run(
        &mut self,
        state: &MulticoverState,
        available: &VertexSet,
        chosen: usize,
    ) -> Result<(), SolveError> {
        self.tick()?;
        if state.residual == 0 {
            self.best = self.best.min(chosen);
            return Ok(());
        }
        let lb = self.lower_bound(state, available);
        if lb == u64::MAX || chosen as u64 + lb >= self.best as u64 {
            return Ok(());
        }
        // Most constrained pending vertex; prune on unsatisfiable ones.
        let mut pivot = None;
        let mut pivot_options = usize::MAX;
        for v in state.pending.iter() {
            let options = self.ctx.cover[v].intersection_size(available);
            let self_rescue = self.ctx.variant.waives_own_demand() && available.contains(v);
            if !self_rescue && options < state.demand[v] as usize {
                return Ok(());
            }
            if options < pivot_options {
                pivot_options = options;
                pivot = Some(v);
            }
        }
        let pivot = pivot.expect("positive residual implies a pending vertex");
        let candidate = self.ctx.cover[pivot]
            .intersection(available)
            .first()
            .or_else(|| available.contains(pivot).then_some(pivot));
        let Some(c) = candidate else {
            return Ok(());
        };

        // Include c.
        let mut with = MulticoverState {
            demand: state.demand.clone(),
            residual: state.residual,
            pending: state.pending.clone(),
        };
        with.choose(self.ctx, c);
        let mut avail = available.clone();
        avail.remove(c);
        self.run(&with, &avail, chosen + 1)?;
        // Exclude c.
        self.run(state, &avail, chosen)
    }
}

/// First (hence lexicographically smallest) set of exactly `target` vertices
/// satisfying the variant, by ascending depth-first enumeration with the
/// same relaxation pruning as the solver.
fn lex_smallest_witness(
    ctx: &DominationContext<'_>,
    target: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<VertexSet>, SolveError> {
    let n = ctx.h.n();

    fn rec(
        ctx: &DominationContext<'_>,
        state: &MulticoverState,
        chosen: &mut Vec<usize>,
        from: usize,
        target: usize,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<Option<VertexSet>, SolveError> {
        *nodes += 1;
        if *nodes > budget {
            return Err(SolveError::BudgetExhausted {
                nodes_explored: *nodes,
            });
        }
        if state.residual == 0 {
            return Ok(Some(VertexSet::from_indices(
                ctx.h.n(),
                chosen.iter().copied(),
            )));
        }
        if chosen.len() == target {
            return Ok(None);
        }
        let remaining = target - chosen.len();
        let future = VertexSet::from_indices(ctx.h.n(), from..ctx.h.n());
        // Feasibility of each pending vertex using only future picks.
        let mut max_gain = 0u64;
        for v in state.pending.iter() {
            let options = ctx.cover[v].intersection_size(&future);
            let self_rescue = ctx.variant.waives_own_demand() && v >= from;
            if !self_rescue && options < state.demand[v] as usize {
                return Ok(None);
            }
        }
        for c in from..ctx.h.n() {
            max_gain = max_gain.max(state.gain(ctx, c));
        }
        if max_gain == 0 || ceil_div(state.residual, max_gain) > remaining as u64 {
            return Ok(None);
        }
        for c in from..ctx.h.n() {
            let mut next = MulticoverState {
                demand: state.demand.clone(),
                residual: state.residual,
                pending: state.pending.clone(),
            };
            next.choose(ctx, c);
            chosen.push(c);
            if let Some(found) = rec(ctx, &next, chosen, c + 1, target, nodes, budget)? {
                return Ok(Some(found));
            }
            chosen.pop();
        }
        Ok(None)
    }

    if n == 0 || MulticoverState::new(ctx).residual == 0 {
        return Ok(Some(VertexSet::empty(n)));
    }
    rec(
        ctx,
        &MulticoverState::new(ctx),
        &mut Vec::new(),
        0,
        target,
        nodes,
        budget,
    )
}

/// Greedy multicover pass; its size is an upper bound on the exact value
/// and seeds the branch and bound incumbent.
pub fn greedy_upper_bound(h: &Hypergraph, variant: DominationVariant) -> Result<usize, SolveError> {
    let ctx = DominationContext::new(h, variant);
    ctx.check_feasible()?;
    Ok(greedy(&ctx).0)
}

fn greedy(ctx: &DominationContext<'_>) -> (usize, VertexSet) {
    let n = ctx.h.n();
    let mut state = MulticoverState::new(ctx);
    let mut picked = VertexSet::empty(n);
    let mut count = 0;
    while state.residual > 0 {
        let mut best = None;
        let mut best_gain = 0u64;
        for c in 0..n {
            if picked.contains(c) {
                continue;
            }
            let g = state.gain(ctx, c);
            if g > best_gain {
                best_gain = g;
                best = Some(c);
            }
        }
        let Some(c) = best else {
            // Only reachable for infeasible s-tuple inputs, which callers
            // reject up front.
            break;
        };
        state.choose(ctx, c);
        picked.insert(c);
        count += 1;
    }
    (count, picked)
}

pub fn min_dominating(
    h: &Hypergraph,
    variant: DominationVariant,
) -> Result<SolveResult, SolveError> {
    min_dominating_with(h, variant, &SolverConfig::default())
}

/// Exact minimum via branch and bound, then a lexicographic search for the
/// smallest witness of that size, so results are deterministic and
/// schedule-independent.
pub fn min_dominating_with(
    h: &Hypergraph,
    variant: DominationVariant,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    let ctx = DominationContext::new(h, variant);
    ctx.check_feasible()?;
    let warnings = ctx.warnings();
    if h.n() == 0 {
        return Ok(SolveResult {
            value: 0,
            witness: VertexSet::empty(0),
            nodes_explored: 0,
            warnings,
        });
    }
    let (greedy_size, _) = greedy(&ctx);
    let mut search = BranchSearch {
        ctx: &ctx,
        nodes: 0,
        budget: config.node_budget,
        best: greedy_size,
    };
    let state = MulticoverState::new(&ctx);
    search.run(&state, &VertexSet::full(h.n()), 0)?;
    let value = search.best;
    let mut nodes = search.nodes;
    let witness = lex_smallest_witness(&ctx, value, &mut nodes, config.node_budget)?
        .expect("a witness of the proven optimum must exist");
    debug_assert!(ctx.satisfied_by(&witness));
    Ok(SolveResult {
        value,
        witness,
        nodes_explored: nodes,
        warnings,
    })
}

pub fn brute_force_oracle(
    h: &Hypergraph,
    variant: DominationVariant,
) -> Result<SolveResult, SolveError> {
    brute_force_oracle_with(h, variant, &SolverConfig::default())
}

/// Plain subset enumeration by increasing cardinality (lexicographic within
/// each size); independent of the branch and bound path and required to
/// agree with it wherever both complete.
pub fn brute_force_oracle_with(
    h: &Hypergraph,
    variant: DominationVariant,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    let ctx = DominationContext::new(h, variant);
    ctx.check_feasible()?;
    let warnings = ctx.warnings();
    let n = h.n();
    let mut nodes = 0u64;
    for size in 0..=n {
        let mut found = None;
        for_each_combination(n, size, &mut |indices| {
            if found.is_some() {
                return false;
            }
            nodes += 1;
            if nodes > config.node_budget {
                return false;
            }
            let d = VertexSet::from_indices(n, indices.iter().copied());
            if ctx.satisfied_by(&d) {
                found = Some(d);
                return false;
            }
            true
        });
        if nodes > config.node_budget {
            return Err(SolveError::BudgetExhausted {
                nodes_explored: nodes,
            });
        }
        if let Some(witness) = found {
            return Ok(SolveResult {
                value: size,
                witness,
                nodes_explored: nodes,
                warnings,
            });
        }
    }
    unreachable!("the full vertex set satisfies every feasible variant");
}

/// Outcome of an exhaustive sweep below a claimed lower bound.
#[derive(Clone, Debug)]
pub enum Refutation {
    /// No set of size `< bound` satisfies the variant; `candidates` sets
    /// were checked.
    Certified { candidates: u64 },
    /// The claimed bound is false: this set satisfies the variant.
    Counterexample { witness: VertexSet },
}

/// Certifies `min >= bound` by checking every subset of size below `bound`.
pub fn refute_below(
    h: &Hypergraph,
    variant: DominationVariant,
    bound: usize,
    config: &SolverConfig,
) -> Result<Refutation, SolveError> {
    let ctx = DominationContext::new(h, variant);
    let n = h.n();
    let mut nodes = 0u64;
    let mut counterexample = None;
    for size in 0..bound.min(n + 1) {
        for_each_combination(n, size, &mut |indices| {
            nodes += 1;
            if nodes > config.node_budget {
                return false;
            }
            let d = VertexSet::from_indices(n, indices.iter().copied());
            if ctx.satisfied_by(&d) {
                counterexample = Some(d);
                return false;
            }
            true
        });
        if nodes > config.node_budget {
            return Err(SolveError::BudgetExhausted {
                nodes_explored: nodes,
            });
        }
        if let Some(witness) = counterexample.take() {
            return Ok(Refutation::Counterexample { witness });
        }
    }
    Ok(Refutation::Certified { candidates: nodes })
}

/// Calls `f` on each `size`-combination of `0..n` in lexicographic order
/// until `f` returns false.
pub(crate) fn for_each_combination(n: usize, size: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut indices: Vec<usize> = (0..size).collect();
    loop {
        if !f(&indices) {
            return;
        }
        // Advance to the next combination.
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if indices[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        indices[i] += 1;
        for j in i + 1..size {
            indices[j] = indices[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{random_isolate_free_k_uniform, XorShift64Star};

    fn h(n: usize, lists: &[Vec<usize>]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, lists).unwrap()
    }

    fn disjoint(k: usize, gamma: usize) -> Hypergraph {
        let lists: Vec<Vec<usize>> = (0..gamma).map(|i| (i * k..(i + 1) * k).collect()).collect();
        h(k * gamma, &lists)
    }

    #[test]
    fn plain_predicate_examples() {
        let g = disjoint(3, 2);
        assert!(is_dominating(&g, &VertexSet::full(6)));
        // One vertex per edge dominates.
        assert!(is_dominating(&g, &VertexSet::from_indices(6, [0, 3])));
        // A set hitting only one of the two edges leaves the other uncovered.
        assert!(!is_dominating(&g, &VertexSet::from_indices(6, [0, 1])));
    }

    #[test]
    fn s_dominating_predicate_examples() {
        let g = h(4, &[vec![0, 1, 2, 3]]);
        assert!(is_s_dominating(&g, &VertexSet::full(4), 3));
        // Any s vertices of a size-(s+1) edge s-dominate the rest.
        assert!(is_s_dominating(&g, &VertexSet::from_indices(4, [0, 1]), 2));
        // s-1 vertices cannot reach s for an outside vertex.
        assert!(!is_s_dominating(&g, &VertexSet::from_indices(4, [0]), 2));
    }

    #[test]
    fn s_tuple_predicate_examples() {
        let g = h(4, &[vec![0, 1, 2, 3]]);
        assert!(is_s_tuple_dominating(&g, &VertexSet::full(4), 3));
        assert!(is_s_tuple_dominating(
            &g,
            &VertexSet::from_indices(4, [0, 1]),
            2
        ));
        assert!(!is_s_tuple_dominating(
            &g,
            &VertexSet::from_indices(4, [0]),
            2
        ));
        // Two disjoint edges: concentrating D on one edge starves the other.
        let g = disjoint(3, 2);
        assert!(!is_s_tuple_dominating(
            &g,
            &VertexSet::from_indices(6, [0, 1]),
            2
        ));
    }

    #[test]
    fn distance_predicate_examples() {
        let chain = h(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]);
        // l at least the diameter: any single vertex suffices.
        assert!(is_distance_dominating(
            &chain,
            &VertexSet::singleton(4, 1),
            3
        ));
        assert!(!is_distance_dominating(
            &chain,
            &VertexSet::singleton(4, 0),
            2
        ));
        let g = disjoint(2, 3);
        assert!(is_distance_dominating(
            &g,
            &VertexSet::from_indices(6, [0, 2, 4]),
            1
        ));
        for l in 1..4 {
            // gamma-1 vertices never distance-dominate gamma disjoint edges.
            assert!(!is_distance_dominating(
                &g,
                &VertexSet::from_indices(6, [0, 2]),
                l
            ));
        }
    }

    #[test]
    fn solver_on_disjoint_edges() {
        let g = disjoint(3, 3);
        let res = min_dominating(&g, DominationVariant::Plain).unwrap();
        assert_eq!(res.value, 3);
        assert_eq!(res.witness.to_vec(), vec![0, 3, 6]);
        assert!(is_dominating(&g, &res.witness));
    }

    #[test]
    fn solver_single_edge_s_tuple() {
        let g = h(5, &[vec![0, 1, 2, 3, 4]]);
        for s in 1..=4 {
            let res = min_dominating(&g, DominationVariant::STuple(s)).unwrap();
            assert_eq!(res.value, s as usize);
            assert_eq!(res.witness.to_vec(), (0..s as usize).collect::<Vec<_>>());
        }
    }

    #[test]
    fn infeasible_s_tuple_is_reported() {
        let g = h(3, &[vec![0, 1], vec![1, 2]]);
        // Vertex 0 has closed neighborhood {0,1} of size 2 < 4.
        assert!(matches!(
            min_dominating(&g, DominationVariant::STuple(4)),
            Err(SolveError::Infeasible { .. })
        ));
        assert!(matches!(
            brute_force_oracle(&g, DominationVariant::STuple(4)),
            Err(SolveError::Infeasible { .. })
        ));
    }

    #[test]
    fn oracle_equals_solver_on_examples() {
        let g = disjoint(2, 2);
        for variant in [
            DominationVariant::Plain,
            DominationVariant::SDominating(2),
            DominationVariant::STuple(2),
            DominationVariant::Distance(2),
        ] {
            let a = min_dominating(&g, variant).unwrap();
            let b = brute_force_oracle(&g, variant).unwrap();
            assert_eq!(a.value, b.value, "variant {variant}");
            assert_eq!(a.witness, b.witness, "variant {variant}");
        }
    }

    #[test]
    fn empty_set_never_dominates_nonempty() {
        let g = h(2, &[vec![0, 1]]);
        let res = brute_force_oracle(&g, DominationVariant::Plain).unwrap();
        assert!(res.value >= 1);
    }

    #[test]
    fn greedy_bounds_exact() {
        let mut rng = XorShift64Star::new(3);
        for _ in 0..25 {
            let g = random_isolate_free_k_uniform(&mut rng, 12, 3, 3);
            let greedy = greedy_upper_bound(&g, DominationVariant::Plain).unwrap();
            let exact = brute_force_oracle(&g, DominationVariant::Plain).unwrap();
            assert!(greedy >= exact.value);
        }
        // Disjoint edges: greedy picks exactly one vertex per edge; a single
        // edge needs one pick.
        assert_eq!(
            greedy_upper_bound(&disjoint(3, 4), DominationVariant::Plain).unwrap(),
            4
        );
        assert_eq!(
            greedy_upper_bound(&h(3, &[vec![0, 1, 2]]), DominationVariant::Plain).unwrap(),
            1
        );
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let g = disjoint(3, 3);
        let tiny = SolverConfig { node_budget: 2 };
        assert!(matches!(
            min_dominating_with(&g, DominationVariant::Plain, &tiny),
            Err(SolveError::BudgetExhausted { .. })
        ));
        assert!(matches!(
            brute_force_oracle_with(&g, DominationVariant::Plain, &tiny),
            Err(SolveError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn isolated_vertices_force_themselves_and_warn() {
        let g = h(4, &[vec![1, 2, 3]]);
        let res = min_dominating(&g, DominationVariant::Plain).unwrap();
        assert!(res.witness.contains(0));
        assert_eq!(res.value, 2);
        assert!(!res.warnings.is_empty());
    }

    #[test]
    fn combination_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, &mut |ix| {
            seen.push(ix.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
