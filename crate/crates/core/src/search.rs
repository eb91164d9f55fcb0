//! Lexicographic local search for spanning trees with few leaves and cheap
//! branch vertices.
//!
//! The engine maintains a spanning tree together with its canonical diameter
//! path and a potential ordered lexicographically as
//! `(leaf count, -path length, -first branch index, first branch degree)`.
//! Candidate exchanges are generated from depth-1 rotations at both
//! orientations of the path plus the cycle-opening, double-exchange, and
//! branch-slide transformations; a candidate is committed only when the
//! measured potential strictly decreases, so stuck states are well defined
//! regardless of how a candidate was derived.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Sigma2};
use crate::instances::randomized_dfs_tree_edges;
use crate::tree::{BoundReport, SpanningTree, TreeError, TreeStats};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("iteration budget exhausted after {iterations} commits (leaf count {leaf_count})")]
    BudgetExhausted { iterations: usize, leaf_count: usize },
    #[error("move {description} produced an invalid tree: {source}")]
    MoveApplication {
        description: String,
        #[source]
        source: TreeError,
    },
}

/// Search configuration. `max_iterations` defaults to `4 * n^3` commits per
/// descent; `max_restarts` further seeds are tried when the stuck tree fails
/// a bound. `rotation_closure` widens rotation endpoints from depth 1 to the
/// full closure (fallback, normally unnecessary).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub max_iterations: Option<usize>,
    pub max_restarts: usize,
    pub rotation_closure: bool,
    pub record_moves: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            max_iterations: None,
            max_restarts: 8,
            rotation_closure: false,
            record_moves: false,
        }
    }
}

/// Search potential, compared lexicographically as
/// `(leaf_count, -path_len, -first_branch_index, first_branch_degree)`.
///
/// `path_len` is the vertex count of the canonical diameter path;
/// `first_branch_index` is the index on that path of the first branch vertex
/// (the head has index 0), or `path_len` when the path has no branch vertex,
/// in which case `first_branch_degree` is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Potential {
    pub leaf_count: usize,
    pub path_len: usize,
    pub first_branch_index: usize,
    pub first_branch_degree: usize,
}

impl Potential {
    pub fn measure(tree: &SpanningTree, path: &[usize]) -> Potential {
        let leaf_count = (0..tree.n()).filter(|&v| tree.is_leaf(v)).count();
        let len = path.len();
        let mut first_branch_index = len;
        let mut first_branch_degree = 0;
        for (i, &v) in path.iter().enumerate().take(len.saturating_sub(1)).skip(1) {
            if tree.degree(v) >= 3 {
                first_branch_index = i;
                first_branch_degree = tree.degree(v);
                break;
            }
        }
        Potential {
            leaf_count,
            path_len: len,
            first_branch_index,
            first_branch_degree,
        }
    }

    /// `(f, -L, -a, d1)` as signed integers, in comparison order.
    pub fn as_tuple(&self) -> (i64, i64, i64, i64) {
        (
            self.leaf_count as i64,
            -(self.path_len as i64),
            -(self.first_branch_index as i64),
            self.first_branch_degree as i64,
        )
    }
}

impl Ord for Potential {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.as_tuple().cmp(&other.as_tuple())
    }
}

impl PartialOrd for Potential {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The exchange transformations. Every variant reduces to an edge exchange:
/// `adds` are host edges absent from the tree, `removes` current tree edges,
/// and applying both yields a spanning tree again.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    /// Attach an off-path neighbor of a path endpoint, cutting the cycle at
    /// the far side, which lengthens the path.
    Extend,
    /// A depth-1 rotation at an endpoint followed by an extension from the
    /// new endpoint.
    RotateExtend,
    /// A rotation whose new endpoint keeps an off-path subtree, absorbing
    /// one leaf.
    RotateAbsorb,
    /// Close the path into a cycle through a chord pair, then reopen it at a
    /// vertex with an off-path tree edge (absorb) or an off-path host
    /// neighbor (extend).
    CycleOpen { absorb: bool },
    /// The two-chord exchange that splices a deep off-path subtree into a
    /// longer path.
    DoubleExchange,
    /// Re-attach a pendant leaf from the first branch vertex to a later path
    /// vertex.
    BranchSlide,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MoveKind::Extend => "extend",
            MoveKind::RotateExtend => "rotate-extend",
            MoveKind::RotateAbsorb => "rotate-absorb",
            MoveKind::CycleOpen { absorb: true } => "cycle-open-absorb",
            MoveKind::CycleOpen { absorb: false } => "cycle-open-extend",
            MoveKind::DoubleExchange => "double-exchange",
            MoveKind::BranchSlide => "branch-slide",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub adds: Vec<(usize, usize)>,
    pub removes: Vec<(usize, usize)>,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for &(u, v) in &self.adds {
            write!(f, " +({u},{v})")?;
        }
        for &(u, v) in &self.removes {
            write!(f, " -({u},{v})")?;
        }
        Ok(())
    }
}

/// A tree together with its canonical diameter path and potential.
#[derive(Debug, Clone)]
pub struct SearchState<'g> {
    pub tree: SpanningTree<'g>,
    pub path: Vec<usize>,
    pub phi: Potential,
}

impl<'g> SearchState<'g> {
    /// Wraps a tree on at least two vertices.
    pub fn from_tree(tree: SpanningTree<'g>) -> Self {
        assert!(tree.n() >= 2, "search state needs at least two vertices");
        let path = tree.diameter_path().expect("n >= 2");
        let phi = Potential::measure(&tree, &path);
        SearchState { tree, path, phi }
    }
}

/// Result of an optimization run: the final tree with its statistics and
/// bound report at `k = k_min`, the number of committed moves of the
/// returned descent, and whether the report certified all three bounds.
#[derive(Debug, Clone)]
pub struct SearchOutcome<'g> {
    pub tree: SpanningTree<'g>,
    pub stats: TreeStats,
    pub report: BoundReport,
    pub iterations: usize,
    pub certified: bool,
    pub restarts_used: usize,
    pub move_log: Vec<String>,
}

/// Spanning tree from a seed-randomized depth-first traversal.
pub fn initial_tree<'g>(g: &'g Graph, seed: u64) -> Result<SpanningTree<'g>, SearchError> {
    if g.n() == 0 {
        return Err(SearchError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let edges = randomized_dfs_tree_edges(g, seed);
    Ok(SpanningTree::build(g, &edges).expect("traversal tree spans"))
}

/// Potential of a tree on at least two vertices.
pub fn potential(tree: &SpanningTree) -> Potential {
    assert!(tree.n() >= 2);
    let path = tree.diameter_path().expect("n >= 2");
    Potential::measure(tree, &path)
}

/// Applies a move and re-validates the tree. Failure indicates a bug in
/// candidate generation and is reported with the full move context.
pub fn apply_move<'g>(tree: &SpanningTree<'g>, mv: &Move) -> Result<SpanningTree<'g>, SearchError> {
    tree.rewire(&mv.removes, &mv.adds)
        .map_err(|source| SearchError::MoveApplication {
            description: mv.to_string(),
            source,
        })
}

type Edits = (Vec<(usize, usize)>, Vec<(usize, usize)>);

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn path_edge_set(path: &[usize]) -> BTreeSet<(usize, usize)> {
    path.windows(2).map(|w| norm(w[0], w[1])).collect()
}

/// One rotation-reachable Hamilton path of the diameter-path vertices. The
/// trivial state has no pivot.
struct RotState {
    path: Vec<usize>,
    pivot: Option<usize>,
}

/// Endpoints reachable by rotations at the head of `base`, each with its
/// rewired path. Depth 1 by default; full closure on request. Endpoints are
/// deduplicated, keeping the first (shallowest, lowest-pivot) derivation.
fn rotation_states(tree: &SpanningTree, base: &[usize], closure: bool) -> Vec<RotState> {
    let host = tree.host();
    let mut states = vec![RotState {
        path: base.to_vec(),
        pivot: None,
    }];
    let mut seen: BTreeSet<usize> = [base[0]].into_iter().collect();
    let mut frontier = vec![0usize];
    let max_depth = if closure { usize::MAX } else { 1 };
    let mut depth = 0;
    while !frontier.is_empty() && depth < max_depth {
        let mut next = Vec::new();
        for &si in &frontier {
            let path = states[si].path.clone();
            let head = path[0];
            let mut index = BTreeMap::new();
            for (i, &v) in path.iter().enumerate() {
                index.insert(v, i);
            }
            for u in host.neighbors(head) {
                let Some(&i) = index.get(&u) else { continue };
                if i < 2 {
                    continue;
                }
                let endpoint = path[i - 1];
                if !seen.insert(endpoint) {
                    continue;
                }
                let mut rotated: Vec<usize> = path[..i].iter().rev().copied().collect();
                rotated.extend_from_slice(&path[i..]);
                states.push(RotState {
                    path: rotated,
                    pivot: Some(u),
                });
                next.push(states.len() - 1);
            }
        }
        frontier = next;
        depth += 1;
    }
    states
}

/// Per-iteration context shared by the candidate generators.
struct Scan<'a, 'g> {
    tree: &'a SpanningTree<'g>,
    host: &'g Graph,
    on_path: Vec<bool>,
    /// For off-path vertices, the tree neighbor one step closer to the path.
    anchor_parent: Vec<usize>,
    path_edges: BTreeSet<(usize, usize)>,
}

impl<'a, 'g> Scan<'a, 'g> {
    fn new(state: &'a SearchState<'g>) -> Self {
        let tree = &state.tree;
        let n = tree.n();
        let mut on_path = vec![false; n];
        for &v in &state.path {
            on_path[v] = true;
        }
        let mut anchor_parent = vec![usize::MAX; n];
        let mut queue: VecDeque<usize> = state.path.iter().copied().collect();
        let mut seen = on_path.clone();
        while let Some(v) = queue.pop_front() {
            for w in tree.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    anchor_parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        Scan {
            tree,
            host: tree.host(),
            on_path,
            anchor_parent,
            path_edges: path_edge_set(&state.path),
        }
    }

    fn has_attachment(&self, v: usize) -> bool {
        self.tree.neighbors(v).any(|w| !self.on_path[w])
    }

    fn has_deep_attachment(&self, v: usize) -> bool {
        self.tree
            .neighbors(v)
            .any(|w| !self.on_path[w] && self.tree.degree(w) >= 2)
    }

    /// Edits turning the current path edges into `new_edges`, as
    /// (additions, removals).
    fn path_diff(&self, new_edges: &BTreeSet<(usize, usize)>) -> Edits {
        let adds: Vec<_> = new_edges.difference(&self.path_edges).copied().collect();
        let removes: Vec<_> = self.path_edges.difference(new_edges).copied().collect();
        (adds, removes)
    }
}

/// Hamilton cycle on the path vertices induced by the chord pair at path
/// index `i`: `head -> p[i] -> ... -> tail -> p[i-1] -> ... -> p[1] -> head`.
fn chord_cycle(p: &[usize], i: usize) -> Vec<usize> {
    let mut cyc = Vec::with_capacity(p.len());
    cyc.push(p[0]);
    cyc.extend_from_slice(&p[i..]);
    cyc.extend(p[1..i].iter().rev());
    cyc
}

fn cycle_edge_set(cyc: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut edges = path_edge_set(cyc);
    edges.insert(norm(cyc[0], cyc[cyc.len() - 1]));
    edges
}

/// All candidate moves of a state with depth-1 rotations, in commitment
/// priority order: absorbing moves (leaf count drops), then extending moves
/// (path grows), then double exchanges, then branch slides. Within a block,
/// candidates are sorted by endpoint, then pivot/neighbor ids; both path
/// orientations are scanned.
pub fn candidate_moves(state: &SearchState) -> Vec<Move> {
    candidate_moves_with_closure(state, false)
}

/// Candidate generation with the rotation depth widened to the full closure
/// when `closure` is set (the fallback mode of [`SearchConfig`]).
pub fn candidate_moves_with_closure(state: &SearchState, closure: bool) -> Vec<Move> {
    let scan = Scan::new(state);
    let len = state.path.len();
    if len < 2 {
        return Vec::new();
    }
    let orientations: [Vec<usize>; 2] = [
        state.path.clone(),
        state.path.iter().rev().copied().collect(),
    ];

    let rotations: Vec<Vec<RotState>> = orientations
        .iter()
        .map(|p| rotation_states(&state.tree, p, closure))
        .collect();

    let mut moves = Vec::new();

    // Absorbing rotations.
    for rots in &rotations {
        let mut block = Vec::new();
        for st in rots.iter().skip(1) {
            let endpoint = st.path[0];
            if scan.tree.degree(endpoint) >= 3 {
                let (adds, removes) = scan.path_diff(&path_edge_set(&st.path));
                block.push((
                    (endpoint, st.pivot.unwrap()),
                    Move {
                        kind: MoveKind::RotateAbsorb,
                        adds,
                        removes,
                    },
                ));
            }
        }
        block.sort_by_key(|(key, _)| *key);
        moves.extend(block.into_iter().map(|(_, mv)| mv));
    }

    // Absorbing cycle openings.
    for p in &orientations {
        moves.extend(cycle_open_candidates(&scan, p, true));
    }

    // Extensions from the path endpoints themselves.
    for p in &orientations {
        let head = p[0];
        for v in scan.host.neighbors(head) {
            if !scan.on_path[v] {
                moves.push(Move {
                    kind: MoveKind::Extend,
                    adds: vec![norm(head, v)],
                    removes: vec![norm(v, scan.anchor_parent[v])],
                });
            }
        }
    }

    // Extensions from rotated endpoints.
    for rots in &rotations {
        let mut block = Vec::new();
        for st in rots.iter().skip(1) {
            let endpoint = st.path[0];
            if scan.tree.degree(endpoint) >= 3 {
                continue; // absorbed above
            }
            let (base_adds, base_removes) = scan.path_diff(&path_edge_set(&st.path));
            for v in scan.host.neighbors(endpoint) {
                if scan.on_path[v] {
                    continue;
                }
                let mut adds = base_adds.clone();
                adds.push(norm(endpoint, v));
                let mut removes = base_removes.clone();
                removes.push(norm(v, scan.anchor_parent[v]));
                block.push((
                    (endpoint, st.pivot.unwrap(), v),
                    Move {
                        kind: MoveKind::RotateExtend,
                        adds,
                        removes,
                    },
                ));
            }
        }
        block.sort_by_key(|(key, _)| *key);
        moves.extend(block.into_iter().map(|(_, mv)| mv));
    }

    // Extending cycle openings.
    for p in &orientations {
        moves.extend(cycle_open_candidates(&scan, p, false));
    }

    // Double exchanges.
    for p in &orientations {
        let head = p[0];
        let tail = p[len - 1];
        let mut block = Vec::new();
        for d in 1..len - 1 {
            if !scan.host.has_edge(head, p[d + 1]) || !scan.host.has_edge(tail, p[d - 1]) {
                continue;
            }
            for c in 1..d {
                if !scan.has_deep_attachment(p[c]) {
                    continue;
                }
                let adds = vec![norm(head, p[d + 1]), norm(tail, p[d - 1])];
                let removes = vec![norm(p[c], p[c - 1]), norm(p[d], p[d - 1])];
                if adds[0] == adds[1] || removes[0] == removes[1] {
                    continue;
                }
                block.push((
                    (p[d], p[c]),
                    Move {
                        kind: MoveKind::DoubleExchange,
                        adds,
                        removes,
                    },
                ));
            }
        }
        block.sort_by_key(|(key, _)| *key);
        moves.extend(block.into_iter().map(|(_, mv)| mv));
    }

    // Branch slides off the first branch vertex.
    for p in &orientations {
        let Some(a) = (1..len - 1).find(|&i| scan.tree.degree(p[i]) >= 3) else {
            continue;
        };
        let x1 = p[a];
        let mut pos = BTreeMap::new();
        for (i, &v) in p.iter().enumerate() {
            pos.insert(v, i);
        }
        let mut block = Vec::new();
        for pendant in scan.tree.neighbors(x1) {
            if scan.on_path[pendant] || scan.tree.degree(pendant) != 1 {
                continue;
            }
            for v1 in scan.host.neighbors(pendant) {
                if pos.get(&v1).is_some_and(|&i| i > a) {
                    block.push((
                        (pendant, v1),
                        Move {
                            kind: MoveKind::BranchSlide,
                            adds: vec![norm(pendant, v1)],
                            removes: vec![norm(pendant, x1)],
                        },
                    ));
                }
            }
        }
        block.sort_by_key(|(key, _)| *key);
        moves.extend(block.into_iter().map(|(_, mv)| mv));
    }

    moves
}

/// Cycle-open candidates for one orientation and flavor, sorted by
/// (open vertex, chord pivot, side, neighbor).
fn cycle_open_candidates(scan: &Scan, p: &[usize], absorb: bool) -> Vec<Move> {
    let len = p.len();
    if len < 3 {
        return Vec::new();
    }
    let head = p[0];
    let tail = p[len - 1];
    let mut block = Vec::new();
    for (i, &t) in p.iter().enumerate().skip(1) {
        if !scan.host.has_edge(head, t) || !scan.host.has_edge(tail, p[i - 1]) {
            continue;
        }
        let cyc = chord_cycle(p, i);
        let cycle_edges = cycle_edge_set(&cyc);
        for (j, &w) in cyc.iter().enumerate() {
            let absorbable = scan.has_attachment(w);
            if absorb && !absorbable {
                continue;
            }
            let prev = cyc[(j + cyc.len() - 1) % cyc.len()];
            let next = cyc[(j + 1) % cyc.len()];
            for (side, other) in [(0usize, prev), (1usize, next)] {
                let opened = norm(w, other);
                let mut new_edges = cycle_edges.clone();
                new_edges.remove(&opened);
                let (adds, removes) = scan.path_diff(&new_edges);
                if adds.is_empty() && removes.is_empty() {
                    continue;
                }
                if adds.len() != removes.len() {
                    continue;
                }
                if absorb {
                    block.push((
                        (w, t, side, 0),
                        Move {
                            kind: MoveKind::CycleOpen { absorb: true },
                            adds,
                            removes,
                        },
                    ));
                } else {
                    for v in scan.host.neighbors(w) {
                        if scan.on_path[v] || scan.tree.contains_edge(w, v) {
                            continue;
                        }
                        let mut adds = adds.clone();
                        adds.push(norm(w, v));
                        let mut removes = removes.clone();
                        removes.push(norm(v, scan.anchor_parent[v]));
                        block.push((
                            (w, t, side, v),
                            Move {
                                kind: MoveKind::CycleOpen { absorb: false },
                                adds,
                                removes,
                            },
                        ));
                    }
                }
            }
        }
    }
    block.sort_by_key(|(key, _)| *key);
    block.into_iter().map(|(_, mv)| mv).collect()
}

/// Net change in leaf count if the move were applied, from degree deltas of
/// the touched vertices only.
fn leaf_delta(tree: &SpanningTree, mv: &Move) -> i64 {
    let mut delta: BTreeMap<usize, i64> = BTreeMap::new();
    for &(u, v) in &mv.adds {
        *delta.entry(u).or_default() += 1;
        *delta.entry(v).or_default() += 1;
    }
    for &(u, v) in &mv.removes {
        *delta.entry(u).or_default() -= 1;
        *delta.entry(v).or_default() -= 1;
    }
    delta
        .into_iter()
        .map(|(v, d)| {
            let before = tree.degree(v) as i64;
            let after = before + d;
            i64::from(after == 1) - i64::from(before == 1)
        })
        .sum()
}

/// Applies the move if it strictly decreases the potential; returns the new
/// state on success.
fn try_improve<'g>(
    state: &SearchState<'g>,
    mv: &Move,
) -> Result<Option<SearchState<'g>>, SearchError> {
    if leaf_delta(&state.tree, mv) > 0 {
        return Ok(None);
    }
    let tree = apply_move(&state.tree, mv)?;
    let path = tree.diameter_path().expect("n >= 2");
    let phi = Potential::measure(&tree, &path);
    if phi < state.phi {
        Ok(Some(SearchState { tree, path, phi }))
    } else {
        Ok(None)
    }
}

/// True when no candidate move strictly decreases the potential.
pub fn is_stuck(state: &SearchState) -> Result<bool, SearchError> {
    for mv in candidate_moves(state) {
        if try_improve(state, &mv)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Diagnostic facts that must hold at any stuck state with at least three
/// leaves: the path is as long as `sigma2 + 1` and both endpoints have all
/// their host neighbors on the path.
#[derive(Debug, Clone)]
pub struct StuckReport {
    pub path_len: usize,
    pub sigma2: Sigma2,
    pub path_len_ok: bool,
    pub head_enclosed: bool,
    pub tail_enclosed: bool,
}

impl StuckReport {
    pub fn pass(&self) -> bool {
        self.path_len_ok && self.head_enclosed && self.tail_enclosed
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.path_len_ok {
            out.push(format!(
                "path length {} below sigma2 + 1 = {} + 1",
                self.path_len, self.sigma2
            ));
        }
        if !self.head_enclosed {
            out.push("head endpoint has a host neighbor off the path".into());
        }
        if !self.tail_enclosed {
            out.push("tail endpoint has a host neighbor off the path".into());
        }
        out
    }
}

/// Checks the stuck-state facts. Returns `None` when the state has fewer
/// than three leaves (the facts are only claimed for `f >= 3`).
#[allow(clippy::int_plus_one)] // comparison kept in its stated form
pub fn stuck_state_invariant(state: &SearchState) -> Option<StuckReport> {
    if state.phi.leaf_count < 3 {
        return None;
    }
    let host = state.tree.host();
    let on_path: BTreeSet<usize> = state.path.iter().copied().collect();
    let head = state.path[0];
    let tail = *state.path.last().unwrap();
    let sigma2 = host.sigma2();
    let path_len_ok = match sigma2 {
        Sigma2::Finite(s) => state.path.len() >= s + 1,
        Sigma2::Infinite => false,
    };
    Some(StuckReport {
        path_len: state.path.len(),
        sigma2,
        path_len_ok,
        head_enclosed: host.neighbors(head).all(|v| on_path.contains(&v)),
        tail_enclosed: host.neighbors(tail).all(|v| on_path.contains(&v)),
    })
}

fn run_descent<'g>(
    tree: SpanningTree<'g>,
    budget: usize,
    closure: bool,
    record_moves: bool,
) -> Result<(SpanningTree<'g>, usize, Vec<String>), SearchError> {
    let mut state = SearchState::from_tree(tree);
    let mut iterations = 0usize;
    let mut move_log = Vec::new();
    loop {
        let mut committed = false;
        for mv in candidate_moves_with_closure(&state, closure) {
            if let Some(next) = try_improve(&state, &mv)? {
                if iterations == budget {
                    return Err(SearchError::BudgetExhausted {
                        iterations,
                        leaf_count: state.phi.leaf_count,
                    });
                }
                debug_assert!(next.phi < state.phi);
                if record_moves {
                    move_log.push(mv.to_string());
                }
                state = next;
                iterations += 1;
                committed = true;
                break;
            }
        }
        if !committed {
            return Ok((state.tree, iterations, move_log));
        }
    }
}

/// Runs the local search, retrying from fresh seeds when the stuck tree
/// fails a bound at `k = k_min`. Returns the first certified outcome, or the
/// best stuck tree by potential with `certified = false` after exhausting
/// `max_restarts`. Exceeding the iteration budget is an error, distinct from
/// bound failure.
pub fn optimize<'g>(g: &'g Graph, config: &SearchConfig) -> Result<SearchOutcome<'g>, SearchError> {
    let n = g.n();
    if n == 0 {
        return Err(SearchError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let k = g.ore_profile().k_min;
    let budget = config.max_iterations.unwrap_or(4 * n * n * n);
    let mut best: Option<SearchOutcome<'g>> = None;
    for restart in 0..=config.max_restarts {
        let seed = config.seed.wrapping_add(restart as u64);
        let tree = initial_tree(g, seed)?;
        let (tree, iterations, move_log) = if n >= 2 {
            run_descent(tree, budget, config.rotation_closure, config.record_moves)?
        } else {
            (tree, 0, Vec::new())
        };
        let stats = tree.stats();
        let report = stats.check_bounds(k);
        let outcome = SearchOutcome {
            certified: report.all_ok(),
            tree,
            stats,
            report,
            iterations,
            restarts_used: restart,
            move_log,
        };
        if outcome.certified {
            return Ok(outcome);
        }
        let better = match &best {
            None => true,
            Some(prev) => potential(&outcome.tree) < potential(&prev.tree),
        };
        if better {
            best = Some(outcome);
        }
    }
    let mut out = best.expect("at least one descent ran");
    out.restarts_used = config.max_restarts;
    Ok(out)
}
