//! Trees: excentricity, exact and constructive j-radius, cut-vertex
//! peeling, spider and fork generators, and exhaustive unlabeled-tree
//! enumeration with r_j(n) tables.
//!
//! Unlabeled enumeration decodes every Prufer sequence and deduplicates by
//! a canonical form: the AHU parenthesis string of the tree rooted at its
//! center (the smaller of the two strings when the tree is bicentral),
//! packed into a u64 with '(' = 0 and ')' = 1.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::domination::for_each_combination;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("a tree on {n} vertices needs {} edges, got {got}", n.saturating_sub(1))]
    WrongEdgeCount { n: usize, got: usize },
    #[error("edge ({0}, {1}) is invalid")]
    BadEdge(usize, usize),
    #[error("edge list does not form a connected acyclic graph")]
    NotATree,
    #[error("malformed parenthesis code")]
    BadParenCode,
}

/// A tree on vertices `0..n`, validated at construction (connected,
/// acyclic, n-1 edges). Adjacency lists are kept sorted so traversals are
/// deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 || edges.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                n,
                got: edges.len(),
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(TreeError::BadEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(TreeError::NotATree);
            }
        }
        let tree = Tree { n, adj };
        // n-1 edges and connectivity together imply acyclicity.
        if tree.distances(0).contains(&u32::MAX) {
            return Err(TreeError::NotATree);
        }
        Ok(tree)
    }

    /// Decode a Prufer sequence of length n-2 into the labeled tree it
    /// encodes (bijective for n >= 2).
    pub fn from_prufer(n: usize, seq: &[usize]) -> Result<Self, TreeError> {
        if n < 2 || seq.len() != n - 2 {
            return Err(TreeError::WrongEdgeCount { n, got: 0 });
        }
        if seq.iter().any(|&s| s >= n) {
            return Err(TreeError::NotATree);
        }
        let mut edges = Vec::with_capacity(n - 1);
        prufer_edges(n, seq, &mut edges);
        Tree::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n.saturating_sub(1));
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// BFS distances from `from`.
    pub fn distances(&self, from: usize) -> Vec<u32> {
        self.distances_restricted(from, None)
    }

    fn distances_restricted(&self, from: usize, alive: Option<&[bool]>) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let is_alive = |v: usize| alive.is_none_or(|a| a[v]);
        assert!(is_alive(from));
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if is_alive(w) && dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Excentricity of a vertex set: the largest distance from any vertex
    /// to its nearest member of `w`.
    pub fn exc_set(&self, w: &[usize]) -> u32 {
        assert!(!w.is_empty(), "excentricity of the empty set is undefined");
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &v in w {
            assert!(v < self.n);
            if dist[v] != 0 {
                dist[v] = 0;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &x in &self.adj[v] {
                if dist[x] == u32::MAX {
                    dist[x] = dist[v] + 1;
                    queue.push_back(x);
                }
            }
        }
        dist.into_iter().max().unwrap()
    }

    /// A longest path, as the vertex sequence from one end to the other.
    /// Double BFS; ties are broken toward smaller vertex indices, so the
    /// result is deterministic.
    pub fn longest_path(&self) -> Vec<usize> {
        self.longest_path_restricted(None)
    }

    fn longest_path_restricted(&self, alive: Option<&[bool]>) -> Vec<usize> {
        let is_alive = |v: usize| alive.is_none_or(|a| a[v]);
        let start = (0..self.n)
            .find(|&v| is_alive(v))
            .expect("empty residual tree");
        let far = |from: usize| {
            let dist = self.distances_restricted(from, alive);
            let mut best = from;
            for v in 0..self.n {
                if is_alive(v) && dist[v] != u32::MAX && dist[v] > dist[best] {
                    best = v;
                }
            }
            (best, dist)
        };
        let (u, _) = far(start);
        let (w, dist_u) = far(u);
        // Walk back from w to u along strictly decreasing distance.
        let mut path = vec![w];
        let mut current = w;
        while current != u {
            let next = self.adj[current]
                .iter()
                .copied()
                .find(|&x| is_alive(x) && dist_u[x] + 1 == dist_u[current])
                .expect("path step");
            path.push(next);
            current = next;
        }
        path.reverse();
        path
    }

    /// Number of distinct paths on exactly `vertices` vertices, counted as
    /// unordered endpoint pairs (paths in a tree are unique).
    pub fn count_paths_on(&self, vertices: usize) -> usize {
        if vertices < 2 {
            return if vertices == 1 { self.n } else { 0 };
        }
        let target = (vertices - 1) as u32;
        let mut count = 0;
        for u in 0..self.n {
            let dist = self.distances(u);
            count += (u + 1..self.n).filter(|&v| dist[v] == target).count();
        }
        count
    }

    /// Canonical form as a packed AHU code; equal keys iff isomorphic.
    /// Needs 2n bits, so enumeration-scale trees only.
    pub fn canonical_key(&self) -> u64 {
        assert!(2 * self.n <= 64, "canonical key needs 2n <= 64 bits");
        self.centers()
            .iter()
            .map(|&c| self.rooted_code(c, usize::MAX).1)
            .min()
            .unwrap()
    }

    /// The canonical AHU parenthesis string, e.g. `(()())` for a path on
    /// three vertices.
    pub fn canonical_paren(&self) -> String {
        let key = self.canonical_key();
        let len = 2 * self.n;
        (0..len)
            .rev()
            .map(|i| if key >> i & 1 == 1 { ')' } else { '(' })
            .collect()
    }

    /// Rebuild a tree from an AHU parenthesis string; vertices are numbered
    /// in preorder, so the result is deterministic.
    pub fn from_paren(code: &str) -> Result<Self, TreeError> {
        let mut stack: Vec<usize> = Vec::new();
        let mut edges = Vec::new();
        let mut next_id = 0usize;
        for ch in code.chars() {
            match ch {
                '(' => {
                    let id = next_id;
                    next_id += 1;
                    if let Some(&parent) = stack.last() {
                        edges.push((parent, id));
                    }
                    stack.push(id);
                }
                ')' => {
                    if stack.pop().is_none() {
                        return Err(TreeError::BadParenCode);
                    }
                }
                _ => return Err(TreeError::BadParenCode),
            }
        }
        if !stack.is_empty() || next_id == 0 {
            return Err(TreeError::BadParenCode);
        }
        Tree::new(next_id, &edges)
    }

    /// The 1 or 2 middle vertices, by iterative leaf peeling.
    pub fn centers(&self) -> Vec<usize> {
        if self.n <= 2 {
            return (0..self.n).collect();
        }
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.adj[v].len()).collect();
        let mut removed = vec![false; self.n];
        let mut layer: Vec<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        let mut remaining = self.n;
        while remaining > 2 {
            for &v in &layer {
                removed[v] = true;
            }
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in &self.adj[v] {
                    if !removed[w] {
                        deg[w] -= 1;
                        if deg[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        (0..self.n).filter(|&v| !removed[v]).collect()
    }

    fn rooted_code(&self, root: usize, parent: usize) -> (u32, u64) {
        let mut children: Vec<(u32, u64)> = self.adj[root]
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| self.rooted_code(c, root))
            .collect();
        children.sort_unstable_by_key(|&(len, bits)| bits << (64 - len));
        let mut bits = 0u64;
        let mut len = 0u32;
        for (cl, cb) in children {
            bits = (bits << cl) | cb;
            len += cl;
        }
        (len + 2, (bits << 1) | 1)
    }
}

/// Witness for a j-radius value: a vertex set and its recomputed
/// excentricity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiusWitness {
    pub vertices: Vec<usize>,
    pub exc: u32,
}

/// Exact j-radius by exhausting all C(n, j) vertex sets; the witness is
/// the lexicographically smallest minimizer.
pub fn radius_j_exact(tree: &Tree, j: usize) -> RadiusWitness {
    assert!(j >= 1 && j <= tree.n(), "need 1 <= j <= n");
    let mut best: Option<RadiusWitness> = None;
    for_each_combination(tree.n(), j, &mut |ix| {
        let exc = tree.exc_set(ix);
        if best.as_ref().is_none_or(|b| exc < b.exc) {
            best = Some(RadiusWitness {
                vertices: ix.to_vec(),
                exc,
            });
        }
        true
    });
    best.unwrap()
}

/// Constructive j-radius witness with the guarantee
/// `exc <= ceil(n / (j+1))`.
///
/// Peeling procedure: for t = 1..j-1, with `m_t = floor((n+t-1)/(j+1))`,
/// pick the (m_t+1)st vertex of a longest path of the current residual
/// tree (its first vertex when the path is short), drop every component of
/// the residual tree minus that vertex lying entirely within distance m_t
/// of it, and finish with a 1-center of what remains.
pub fn radius_j_constructive(tree: &Tree, j: usize) -> RadiusWitness {
    let n = tree.n();
    assert!(j >= 1 && j <= n, "need 1 <= j <= n");
    let mut alive = vec![true; n];
    let mut picks: Vec<usize> = Vec::new();

    for t in 1..j {
        let m_t = (n + t - 1) / (j + 1);
        let path = tree.longest_path_restricted(Some(&alive));
        let v = if path.len() > m_t { path[m_t] } else { path[0] };
        picks.push(v);
        peel_close_components(tree, &mut alive, v, m_t as u32);
    }

    // 1-center of the residual tree: the middle of one of its longest paths.
    let path = tree.longest_path_restricted(Some(&alive));
    picks.push(path[(path.len() - 1) / 2]);

    picks.sort_unstable();
    picks.dedup();
    if picks.len() < j {
        // Repeated picks on tiny residual trees; pad with unused vertices,
        // which can only lower the excentricity.
        let unused: Vec<usize> = (0..n).filter(|v| !picks.contains(v)).collect();
        picks.extend(unused.into_iter().take(j - picks.len()));
    }
    picks.sort_unstable();
    let exc = tree.exc_set(&picks);
    RadiusWitness {
        vertices: picks,
        exc,
    }
}

/// Remove every component of the residual tree minus `v` whose vertices
/// all lie within distance `m` of `v`. `v` itself stays.
fn peel_close_components(tree: &Tree, alive: &mut [bool], v: usize, m: u32) {
    let dist = tree.distances_restricted(v, Some(alive));
    let mut assigned = vec![false; tree.n()];
    for &x in tree.neighbors(v) {
        if !alive[x] || assigned[x] {
            continue;
        }
        // Collect the component of x in the residual tree minus v.
        let mut component = vec![x];
        assigned[x] = true;
        let mut idx = 0;
        let mut max_dist = dist[x];
        while idx < component.len() {
            let y = component[idx];
            idx += 1;
            for &z in tree.neighbors(y) {
                if z != v && alive[z] && !assigned[z] {
                    assigned[z] = true;
                    max_dist = max_dist.max(dist[z]);
                    component.push(z);
                }
            }
        }
        if max_dist <= m {
            for &y in &component {
                alive[y] = false;
            }
        }
    }
}

/// Cut-vertex step: a vertex `v` such that the components of `T - v` lying
/// within distance `m` of `v` together hold at least `m` vertices.
/// Returns `v` and the peeled vertex set.
pub fn cut_vertex(tree: &Tree, m: usize) -> (usize, Vec<usize>) {
    let n = tree.n();
    assert!(m >= 1 && m < n, "need 1 <= m < n");
    let path = tree.longest_path();
    let v = if path.len() > m { path[m] } else { path[0] };
    let mut alive = vec![true; n];
    peel_close_components(tree, &mut alive, v, m as u32);
    let peeled: Vec<usize> = (0..n).filter(|&x| !alive[x] && x != v).collect();
    debug_assert!(
        peeled.len() >= m,
        "cut vertex must peel at least m vertices"
    );
    (v, peeled)
}

/// Spider with the given leg lengths: `1 + sum(legs)` vertices, the hub
/// has degree `legs.len()`.
pub fn spider(legs: &[usize]) -> Tree {
    assert!(!legs.is_empty() && legs.iter().all(|&a| a >= 1));
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::new(next, &edges).unwrap()
}

pub fn path(n: usize) -> Tree {
    assert!(n >= 1);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Tree::new(n, &edges).unwrap()
}

/// Fork: a path on n-1 vertices with a pendant edge at the second vertex
/// from one end, the unique non-path tree containing two copies of a path
/// on n-1 vertices.
pub fn fork(n: usize) -> Tree {
    assert!(n >= 4, "fork needs at least 4 vertices");
    let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|v| (v - 1, v)).collect();
    edges.push((1, n - 1));
    Tree::new(n, &edges).unwrap()
}

const ENUMERATION_CAP: usize = 10;

/// Every unlabeled tree on `n` vertices, exactly once, in canonical-key
/// order: all Prufer sequences are decoded and deduplicated by canonical
/// form. Capped at n <= 10; the 10^8 sequences at n = 10 are split across
/// threads, and the merged key set does not depend on the schedule.
pub fn all_trees(n: usize) -> Vec<Tree> {
    assert!(
        (1..=ENUMERATION_CAP).contains(&n),
        "tree enumeration is capped at n <= {ENUMERATION_CAP}"
    );
    if n == 1 {
        return vec![Tree::new(1, &[]).unwrap()];
    }
    if n == 2 {
        return vec![Tree::new(2, &[(0, 1)]).unwrap()];
    }
    let keys: BTreeSet<u64> = if n >= 9 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..n)
                .map(|first| scope.spawn(move || enumerate_keys(n, Some(first))))
                .collect();
            let mut merged = BTreeSet::new();
            for handle in handles {
                merged.extend(handle.join().expect("enumeration thread"));
            }
            merged
        })
    } else {
        enumerate_keys(n, None)
    };
    keys.into_iter()
        .map(|key| {
            let paren: String = (0..2 * n)
                .rev()
                .map(|i| if key >> i & 1 == 1 { ')' } else { '(' })
                .collect();
            Tree::from_paren(&paren).expect("canonical key decodes")
        })
        .collect()
}

/// Canonical keys of all trees whose Prufer sequence starts with `first`
/// (or of every tree when `first` is None). Buffers are reused across the
/// n^(n-2) iterations.
fn enumerate_keys(n: usize, first: Option<usize>) -> BTreeSet<u64> {
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let fixed = match first {
        Some(f) => {
            seq[0] = f;
            1
        }
        None => 0,
    };
    let mut keys = BTreeSet::new();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    let mut degree = vec![0u32; n];
    let mut scratch = AdjScratch::new(n);
    loop {
        edges.clear();
        prufer_edges_with(n, &seq, &mut degree, &mut edges);
        keys.insert(scratch.canonical_key(&edges));
        // Odometer over the free positions, last position fastest.
        let mut pos = len;
        loop {
            if pos == fixed {
                return keys;
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
        }
    }
}

fn prufer_edges(n: usize, seq: &[usize], edges: &mut Vec<(usize, usize)>) {
    let mut degree = vec![1u32; n];
    prufer_edges_with(n, seq, &mut degree, edges);
}

fn prufer_edges_with(n: usize, seq: &[usize], degree: &mut [u32], edges: &mut Vec<(usize, usize)>) {
    debug_assert_eq!(seq.len(), n - 2);
    degree[..n].fill(1);
    for &s in seq {
        degree[s] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
}

/// Reusable flat buffers for the enumeration hot path; no allocation per
/// decoded tree.
struct AdjScratch {
    n: usize,
    adj: [[u8; ENUMERATION_CAP]; ENUMERATION_CAP],
    adj_len: [u8; ENUMERATION_CAP],
    deg: [u8; ENUMERATION_CAP],
    removed: [bool; ENUMERATION_CAP],
}

impl AdjScratch {
    fn new(n: usize) -> Self {
        assert!(n <= ENUMERATION_CAP);
        AdjScratch {
            n,
            adj: [[0; ENUMERATION_CAP]; ENUMERATION_CAP],
            adj_len: [0; ENUMERATION_CAP],
            deg: [0; ENUMERATION_CAP],
            removed: [false; ENUMERATION_CAP],
        }
    }

    fn canonical_key(&mut self, edges: &[(usize, usize)]) -> u64 {
        let n = self.n;
        self.adj_len[..n].fill(0);
        for &(u, v) in edges {
            self.adj[u][self.adj_len[u] as usize] = v as u8;
            self.adj_len[u] += 1;
            self.adj[v][self.adj_len[v] as usize] = u as u8;
            self.adj_len[v] += 1;
        }
        // Centers by leaf peeling.
        self.deg[..n].copy_from_slice(&self.adj_len[..n]);
        self.removed[..n].fill(false);
        let mut layer = [0u8; ENUMERATION_CAP];
        let mut layer_len = 0;
        for v in 0..n {
            if self.deg[v] <= 1 {
                layer[layer_len] = v as u8;
                layer_len += 1;
            }
        }
        let mut remaining = n;
        while remaining > 2 {
            let mut next = [0u8; ENUMERATION_CAP];
            let mut next_len = 0;
            for &v in &layer[..layer_len] {
                self.removed[v as usize] = true;
            }
            remaining -= layer_len;
            for &v in &layer[..layer_len] {
                let v = v as usize;
                for &w in &self.adj[v][..self.adj_len[v] as usize] {
                    let w = w as usize;
                    if !self.removed[w] {
                        self.deg[w] -= 1;
                        if self.deg[w] == 1 {
                            next[next_len] = w as u8;
                            next_len += 1;
                        }
                    }
                }
            }
            layer = next;
            layer_len = next_len;
        }
        let mut best = u64::MAX;
        for c in 0..n {
            if !self.removed[c] {
                let (_, bits) = self.code(c, u8::MAX);
                best = best.min(bits);
            }
        }
        best
    }

    fn code(&self, root: usize, parent: u8) -> (u32, u64) {
        let mut children: [(u32, u64); ENUMERATION_CAP] = [(0, 0); ENUMERATION_CAP];
        let mut count = 0;
        for &c in &self.adj[root][..self.adj_len[root] as usize] {
            if c != parent {
                children[count] = self.code(c as usize, root as u8);
                count += 1;
            }
        }
        // Insertion sort on left-aligned code bits; at most 9 children.
        for i in 1..count {
            let item = children[i];
            let key = item.1 << (64 - item.0);
            let mut j = i;
            while j > 0 && children[j - 1].1 << (64 - children[j - 1].0) > key {
                children[j] = children[j - 1];
                j -= 1;
            }
            children[j] = item;
        }
        let mut bits = 0u64;
        let mut len = 0u32;
        for &(cl, cb) in &children[..count] {
            bits = (bits << cl) | cb;
            len += cl;
        }
        (len + 2, (bits << 1) | 1)
    }
}

/// One row of the r_j(n) table: the extremal value and every extremal tree
/// in canonical form.
#[derive(Clone, Debug)]
pub struct RadiusTableRow {
    pub n: usize,
    pub j: usize,
    pub value: u32,
    pub extremal: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct RadiusTable {
    pub rows: Vec<RadiusTableRow>,
}

impl RadiusTable {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tj\tr_j\textremal_count\textremal_trees\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                row.n,
                row.j,
                row.value,
                row.extremal.len(),
                row.extremal.join(";")
            ));
        }
        out
    }
}

/// Exhaustive `r_j(n) = max over n-vertex trees of r_j(T)` for all
/// `n <= n_max`, `j <= j_max`, with every extremal tree recorded. The
/// sandwich `floor(n/(j+1)) <= r_j(n) <= ceil(n/(j+1))` and the closed
/// form `r_1(n) = ceil((n-1)/2)` are asserted on every row.
pub fn r_j_table(n_max: usize, j_max: usize) -> RadiusTable {
    assert!(
        n_max <= ENUMERATION_CAP,
        "enumeration budget is n <= {ENUMERATION_CAP}"
    );
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let trees = all_trees(n);
        for j in 1..=j_max.min(n) {
            let values: Vec<u32> = trees.iter().map(|t| radius_j_exact(t, j).exc).collect();
            let value = *values.iter().max().unwrap();
            assert!(
                (n / (j + 1)) as u32 <= value && value <= n.div_ceil(j + 1) as u32,
                "r_{j}({n}) = {value} escapes the sandwich"
            );
            if j == 1 {
                assert_eq!(value, (n - 1).div_ceil(2) as u32, "r_1({n}) closed form");
            }
            let extremal: Vec<String> = trees
                .iter()
                .zip(&values)
                .filter(|&(_, &v)| v == value)
                .map(|(t, _)| t.canonical_paren())
                .collect();
            rows.push(RadiusTableRow {
                n,
                j,
                value,
                extremal,
            });
        }
    }
    RadiusTable { rows }
}
