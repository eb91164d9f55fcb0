//! Validated spanning trees, leaf/branch statistics, the canonical diameter
//! path, and the three Ore-type bound checks.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{edge_list_document, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("edge ({u}, {v}) is not an edge of the host graph")]
    EdgeNotInHost { u: usize, v: usize },
    #[error("edge ({u}, {v}) closes a cycle")]
    CyclePresent { u: usize, v: usize },
    #[error("edge set does not span the host graph")]
    NotSpanning,
    #[error("host graph has no vertices")]
    EmptyHost,
    #[error("operation undefined on a single-vertex tree")]
    SingleVertex,
    #[error("edge ({u}, {v}) is not in the tree")]
    MissingEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) is already in the tree")]
    DuplicateEdge { u: usize, v: usize },
}

/// A spanning tree of a host graph: `n - 1` edges, connected, acyclic, every
/// edge an edge of the host.
///
/// Read-only once built; the search engine produces new trees through
/// [`SpanningTree::rewire`], which re-validates. Safe to share across
/// concurrent readers.
#[derive(Debug, Clone)]
pub struct SpanningTree<'g> {
    host: &'g Graph,
    adj: Vec<BTreeSet<usize>>,
}

/// Leaf and branch statistics of a spanning tree.
///
/// For `n >= 2` these satisfy `leaf_count = sum(d_i - 2) + 2` over branch
/// degrees `d_i`, and `leaf_count >= branch_count + 2`; both are asserted at
/// construction. A single-vertex tree reports zero leaves and branches and a
/// one-vertex diameter path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub leaf_count: usize,
    /// Branch vertices (tree degree >= 3), ascending.
    pub branch_vertices: Vec<usize>,
    /// Sum of tree degrees over the branch vertices.
    pub branch_degree_sum: usize,
    /// Canonical longest leaf-to-leaf path (see [`SpanningTree::diameter_path`]).
    pub diameter_path: Vec<usize>,
}

impl TreeStats {
    pub fn branch_count(&self) -> usize {
        self.branch_vertices.len()
    }

    /// Evaluates the three bounds for the given `k >= 1` in exact integer
    /// arithmetic: `f <= k - b + 1`, `2b <= k - 1`, and `2s <= 3(k - 1)`.
    #[allow(clippy::int_plus_one)] // comparisons kept in their stated form
    pub fn check_bounds(&self, k: usize) -> BoundReport {
        assert!(k >= 1, "k must be positive");
        let k_i = k as i64;
        let f = self.leaf_count as i64;
        let b = self.branch_count() as i64;
        let s = self.branch_degree_sum as i64;
        BoundReport {
            k,
            max_leaves: k_i - b + 1,
            leaves_ok: f <= k_i - b + 1,
            max_branch_vertices: (k_i - 1).div_euclid(2),
            branch_ok: 2 * b <= k_i - 1,
            max_degree_sum_x2: 3 * (k_i - 1),
            degree_sum_ok: 2 * s <= 3 * (k_i - 1),
        }
    }
}

/// Outcome of checking a tree's statistics against the three bounds for a
/// given `k`. The degree-sum limit `3(k - 1) / 2` is kept doubled so every
/// comparison stays in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub k: usize,
    /// Leaf allowance `k - b + 1` for this tree's branch count.
    pub max_leaves: i64,
    pub leaves_ok: bool,
    /// Branch-vertex allowance `floor((k - 1) / 2)`.
    pub max_branch_vertices: i64,
    pub branch_ok: bool,
    /// Doubled degree-sum allowance `3(k - 1)`; the check is `2s <= 3(k - 1)`.
    pub max_degree_sum_x2: i64,
    pub degree_sum_ok: bool,
}

impl BoundReport {
    pub fn all_ok(&self) -> bool {
        self.leaves_ok && self.branch_ok && self.degree_sum_ok
    }
}

impl<'g> SpanningTree<'g> {
    /// Validates an edge set as a spanning tree of `host`.
    pub fn build(host: &'g Graph, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        let n = host.n();
        if n == 0 {
            return Err(TreeError::EmptyHost);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                expected: n - 1,
                found: edges.len(),
            });
        }
        let mut adj = vec![BTreeSet::new(); n];
        let mut uf = UnionFind::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n || !host.has_edge(u, v) {
                return Err(TreeError::EdgeNotInHost { u, v });
            }
            if !uf.union(u, v) {
                return Err(TreeError::CyclePresent { u, v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        // n - 1 acyclic edges always span; kept as a safeguard.
        if uf.components() != 1 {
            return Err(TreeError::NotSpanning);
        }
        Ok(SpanningTree { host, adj })
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn is_branch(&self, v: usize) -> bool {
        self.degree(v) >= 3
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Tree neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// All tree edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for u in 0..self.n() {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// The unique path from `u` to `v`, inclusive.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        assert!(u < self.n() && v < self.n());
        let (_, parent) = bfs(&self.adj, u);
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Canonical longest path of the tree.
    ///
    /// Among all maximum-length paths, with each candidate oriented so its
    /// first vertex is smaller than its last, this returns the
    /// lexicographically least vertex sequence. The endpoints are leaves.
    /// Errors on a single-vertex tree.
    pub fn diameter_path(&self) -> Result<Vec<usize>, TreeError> {
        if self.n() < 2 {
            return Err(TreeError::SingleVertex);
        }
        Ok(canonical_diameter_path(&self.adj))
    }

    /// Leaf and branch statistics plus the canonical diameter path. Asserts
    /// the leaf identity `f = sum(d_i - 2) + 2` and `f >= b + 2` before
    /// returning; a violation means the tree structure is corrupted.
    pub fn stats(&self) -> TreeStats {
        let n = self.n();
        if n == 1 {
            return TreeStats {
                leaf_count: 0,
                branch_vertices: Vec::new(),
                branch_degree_sum: 0,
                diameter_path: vec![0],
            };
        }
        let mut leaf_count = 0;
        let mut branch_vertices = Vec::new();
        let mut branch_degree_sum = 0;
        for v in 0..n {
            let d = self.degree(v);
            if d == 1 {
                leaf_count += 1;
            } else if d >= 3 {
                branch_vertices.push(v);
                branch_degree_sum += d;
            }
        }
        let stats = TreeStats {
            leaf_count,
            branch_vertices,
            branch_degree_sum,
            diameter_path: canonical_diameter_path(&self.adj),
        };
        let identity: i64 = stats
            .branch_vertices
            .iter()
            .map(|&v| self.degree(v) as i64 - 2)
            .sum::<i64>()
            + 2;
        assert_eq!(
            stats.leaf_count as i64, identity,
            "leaf identity violated: corrupted tree"
        );
        assert!(
            stats.leaf_count >= stats.branch_count() + 2,
            "leaf/branch inequality violated: corrupted tree"
        );
        stats
    }

    /// Applies an edge exchange and re-validates the result as a spanning
    /// tree of the same host. `removes` must be current tree edges and `adds`
    /// host edges absent from the tree.
    pub fn rewire(
        &self,
        removes: &[(usize, usize)],
        adds: &[(usize, usize)],
    ) -> Result<Self, TreeError> {
        let mut next = self.clone();
        for &(u, v) in removes {
            if !next.adj[u].remove(&v) || !next.adj[v].remove(&u) {
                return Err(TreeError::MissingEdge { u, v });
            }
        }
        for &(u, v) in adds {
            if !self.host.has_edge(u, v) {
                return Err(TreeError::EdgeNotInHost { u, v });
            }
            if !next.adj[u].insert(v) || !next.adj[v].insert(u) {
                return Err(TreeError::DuplicateEdge { u, v });
            }
        }
        let mut uf = UnionFind::new(next.n());
        for (u, v) in next.edges() {
            if !uf.union(u, v) {
                return Err(TreeError::CyclePresent { u, v });
            }
        }
        if uf.components() != 1 {
            return Err(TreeError::NotSpanning);
        }
        Ok(next)
    }

    /// Edge-list document in the same format as the host graph serializer.
    pub fn to_edge_list(&self) -> String {
        edge_list_document(self.n(), &self.edges())
    }

    /// DOT rendering with branch vertices drawn as boxes and leaves labeled.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph spanning_tree {\n");
        for v in 0..self.n() {
            if self.is_branch(v) {
                out.push_str(&format!("  {v} [shape=box];\n"));
            } else if self.n() >= 2 && self.is_leaf(v) {
                out.push_str(&format!("  {v} [label=\"{v} (leaf)\"];\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// BFS over a tree adjacency, returning distances and parent pointers.
pub(crate) fn bfs(adj: &[BTreeSet<usize>], start: usize) -> (Vec<usize>, Vec<usize>) {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[start] = 0;
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Canonical longest path of a tree given as adjacency sets (`n >= 2`).
///
/// Strategy: a farthest-vertex double sweep pins the diameter `D`; every
/// vertex's eccentricity is `max` of its distances to the two sweep ends, so
/// the diameter endpoints are exactly the vertices of eccentricity `D`. The
/// smallest endpoint starts the canonical path (any oriented candidate
/// starting elsewhere is lexicographically larger), and a last sweep from it
/// compares the paths to each of its antipodes.
pub(crate) fn canonical_diameter_path(adj: &[BTreeSet<usize>]) -> Vec<usize> {
    let n = adj.len();
    debug_assert!(n >= 2);
    let (d0, _) = bfs(adj, 0);
    let a = argmax_min_id(&d0);
    let (da, _) = bfs(adj, a);
    let b = argmax_min_id(&da);
    let diam = da[b];
    let (db, _) = bfs(adj, b);
    let start = (0..n)
        .find(|&x| da[x].max(db[x]) == diam)
        .expect("diameter endpoint exists");
    let (ds, ps) = bfs(adj, start);
    let mut best: Option<Vec<usize>> = None;
    for (v, &d) in ds.iter().enumerate() {
        if d != diam {
            continue;
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != start {
            cur = ps[cur];
            path.push(cur);
        }
        path.reverse();
        if best.as_ref().is_none_or(|b| path < *b) {
            best = Some(path);
        }
    }
    best.expect("tree with n >= 2 has a diameter path")
}

fn argmax_min_id(dist: &[usize]) -> usize {
    let mut best = 0;
    for (v, &d) in dist.iter().enumerate() {
        if d > dist[best] {
            best = v;
        }
    }
    best
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false when both endpoints were already in one component.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        self.components -= 1;
        true
    }

    fn components(&self) -> usize {
        self.components
    }
}
