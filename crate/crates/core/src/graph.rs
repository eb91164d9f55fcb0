//! Simple undirected graphs with adjacency sets, edge-list parsing and
//! serialization, and the Ore degree-sum parameters.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Minimum degree sum over pairs of distinct nonadjacent vertices.
///
/// Infinite exactly when no such pair exists (complete graphs and graphs on
/// fewer than two vertices). The infinite case is a real variant rather than
/// a sentinel value so that every comparison against it is branch-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma2 {
    Finite(usize),
    Infinite,
}

impl Sigma2 {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Sigma2::Infinite)
    }

    /// `self >= bound`, with the infinite variant at least anything.
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Sigma2::Infinite => true,
            Sigma2::Finite(s) => *s as i64 >= bound,
        }
    }
}

impl fmt::Display for Sigma2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma2::Finite(s) => write!(f, "{s}"),
            Sigma2::Infinite => write!(f, "infinity"),
        }
    }
}

/// Ore parameters of a graph: `sigma2` together with the least positive `k`
/// such that `sigma2 >= n - k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OreProfile {
    pub sigma2: Sigma2,
    pub k_min: usize,
}

/// Errors from [`Graph::parse`], each carrying the 1-based offending line.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("header: expected \"n m\" on the first line")]
    BadHeader,
    #[error("line {line}: expected edge \"u v\"")]
    BadEdge { line: usize },
    #[error("line {line}: vertex {id} out of range (n = {n})")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: loop edge at vertex {v}")]
    LoopEdge { line: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("line {line}: trailing content after edge list")]
    TrailingContent { line: usize },
}

/// Result of parsing an edge-list document: the graph plus the number of
/// duplicate edge lines that were collapsed.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

/// Simple undirected graph on vertices `0..n` with set-valued adjacency.
///
/// No loops, no multi-edges; adjacency is kept symmetric. Immutable once
/// built (generators mutate only during construction), so shared references
/// are safe across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge iterator. Panics on loops or out-of-range
    /// ids (programmatic misuse); duplicate edges are collapsed silently.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the undirected edge `{u, v}`; returns false if already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        let n = self.n();
        assert!(u < n && v < n && u != v, "invalid edge ({u}, {v})");
        self.adj[u].insert(v) && self.adj[v].insert(u)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// Parses the edge-list format: a header line `n m` followed by `m`
    /// lines `u v` with `0 <= u, v < n` and `u != v`. Blank lines are
    /// skipped; duplicate edges collapse with a count in the result.
    pub fn parse(text: &str) -> Result<Parsed, ParseError> {
        let mut lines = text.lines().enumerate();
        let (n, m) = loop {
            match lines.next() {
                None => return Err(ParseError::BadHeader),
                Some((_, l)) if l.trim().is_empty() => continue,
                Some((_, l)) => {
                    let mut it = l.split_whitespace();
                    match (it.next(), it.next(), it.next()) {
                        (Some(a), Some(b), None) => {
                            let n = a.parse().map_err(|_| ParseError::BadHeader)?;
                            let m = b.parse().map_err(|_| ParseError::BadHeader)?;
                            break (n, m);
                        }
                        _ => return Err(ParseError::BadHeader),
                    }
                }
            }
        };
        let mut graph = Graph::new(n);
        let mut duplicate_edges = 0;
        let mut found = 0usize;
        for (idx, l) in lines {
            let line = idx + 1;
            if l.trim().is_empty() {
                continue;
            }
            if found == m {
                return Err(ParseError::TrailingContent { line });
            }
            let mut it = l.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => {
                    let u = a.parse().map_err(|_| ParseError::BadEdge { line })?;
                    let v = b.parse().map_err(|_| ParseError::BadEdge { line })?;
                    (u, v)
                }
                _ => return Err(ParseError::BadEdge { line }),
            };
            for id in [u, v] {
                if id >= n {
                    return Err(ParseError::VertexOutOfRange { line, id, n });
                }
            }
            if u == v {
                return Err(ParseError::LoopEdge { line, v: u });
            }
            if !graph.add_edge(u, v) {
                duplicate_edges += 1;
            }
            found += 1;
        }
        if found < m {
            return Err(ParseError::WrongEdgeCount {
                expected: m,
                found,
            });
        }
        Ok(Parsed {
            graph,
            duplicate_edges,
        })
    }

    /// Serializes to the canonical edge-list document: `n m`, then sorted
    /// edges `u v` with `u < v`, newline-terminated.
    pub fn to_edge_list(&self) -> String {
        edge_list_document(self.n(), &self.edges())
    }

    /// True iff every vertex is reachable from vertex 0. Graphs on zero or
    /// one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// Minimum of `degree(u) + degree(v)` over nonadjacent pairs of distinct
    /// vertices, or infinite when every pair is adjacent.
    pub fn sigma2(&self) -> Sigma2 {
        let n = self.n();
        let mut best: Option<usize> = None;
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u].contains(&v) {
                    let s = self.degree(u) + self.degree(v);
                    best = Some(best.map_or(s, |b| b.min(s)));
                }
            }
        }
        best.map_or(Sigma2::Infinite, Sigma2::Finite)
    }

    /// Computes `sigma2` and the minimal positive `k` with
    /// `sigma2 >= n - k + 1`.
    pub fn ore_profile(&self) -> OreProfile {
        let sigma2 = self.sigma2();
        let k_min = match sigma2 {
            Sigma2::Infinite => 1,
            Sigma2::Finite(s) => (self.n() as i64 - s as i64 + 1).max(1) as usize,
        };
        OreProfile { sigma2, k_min }
    }
}

/// Shared edge-list formatter used for both graphs and trees.
pub(crate) fn edge_list_document(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", n, edges.len()));
    for &(u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
