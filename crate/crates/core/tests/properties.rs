//! Property tests. Where a value has an independent derivation (a second
//! sigma2 implementation, an all-pairs longest-path scan, a backtracking
//! Hamilton-path search), the oracle lives here and stays independent of the
//! library path it checks.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use oretree_core::graph::{Graph, Sigma2};
use oretree_core::instances;
use oretree_core::oracle;
use oretree_core::search::{self, SearchConfig, SearchState};
use oretree_core::tree::SpanningTree;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    Graph::from_edges(
        n,
        pairs(n)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e),
    )
}

/// Second implementation path for sigma2: a dense adjacency matrix filled
/// from the edge list, scanned over unordered independent pairs.
fn sigma2_brute(g: &Graph) -> Sigma2 {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    let mut degree = vec![0usize; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] {
                let s = degree[u] + degree[v];
                best = Some(best.map_or(s, |b: usize| b.min(s)));
            }
        }
    }
    best.map_or(Sigma2::Infinite, Sigma2::Finite)
}

/// All-pairs longest-path oracle for the canonical diameter path: every
/// maximum-length path oriented with its smaller endpoint first, then the
/// lexicographic minimum.
fn canonical_diameter_brute(t: &SpanningTree) -> Vec<usize> {
    let n = t.n();
    let mut best: Option<Vec<usize>> = None;
    for u in 0..n {
        for v in u + 1..n {
            let path = t.path_between(u, v);
            match &best {
                None => best = Some(path),
                Some(b) => {
                    if path.len() > b.len() || (path.len() == b.len() && path < *b) {
                        best = Some(path);
                    }
                }
            }
        }
    }
    best.expect("n >= 2")
}

/// Backtracking Hamilton-path search (small n only).
fn has_hamilton_path(g: &Graph) -> bool {
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if path.len() == g.n() {
            return true;
        }
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    let n = g.n();
    if n <= 1 {
        return true;
    }
    for start in 0..n {
        let mut used = vec![false; n];
        used[start] = true;
        if extend(g, &mut vec![start], &mut used) {
            return true;
        }
    }
    false
}

proptest! {
    #[test]
    fn sigma2_matches_brute_force(n in 1usize..=7, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        prop_assert_eq!(g.sigma2(), sigma2_brute(&g));
    }

    #[test]
    fn ore_profile_is_tight(n in 1usize..=7, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let p = g.ore_profile();
        prop_assert!(p.k_min >= 1);
        prop_assert!(p.sigma2.at_least(n as i64 - p.k_min as i64 + 1));
        if p.k_min > 1 {
            prop_assert!(!p.sigma2.at_least(n as i64 - (p.k_min as i64 - 1) + 1));
        }
    }

    #[test]
    fn parse_serialize_round_trip(n in 1usize..=8, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let doc = g.to_edge_list();
        let parsed = Graph::parse(&doc).unwrap();
        prop_assert_eq!(parsed.duplicate_edges, 0);
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert_eq!(parsed.graph.to_edge_list(), doc);
    }

    #[test]
    fn random_tree_stats_identities(n in 2usize..=60, seed in any::<u64>()) {
        let g = instances::random_connected(n, 0.0, seed);
        let t = SpanningTree::build(&g, &g.edges()).unwrap();
        let stats = t.stats();
        let identity: i64 = stats
            .branch_vertices
            .iter()
            .map(|&v| t.degree(v) as i64 - 2)
            .sum::<i64>() + 2;
        prop_assert_eq!(stats.leaf_count as i64, identity);
        prop_assert!(stats.leaf_count >= stats.branch_count() + 2);
    }

    #[test]
    fn diameter_path_is_canonical(n in 2usize..=12, seed in any::<u64>()) {
        let g = instances::random_connected(n, 0.0, seed);
        let t = SpanningTree::build(&g, &g.edges()).unwrap();
        let path = t.diameter_path().unwrap();
        prop_assert_eq!(&path, &canonical_diameter_brute(&t));
        prop_assert!(t.is_leaf(path[0]));
        prop_assert!(t.is_leaf(*path.last().unwrap()));
        prop_assert!(path[0] < *path.last().unwrap());
    }

    #[test]
    fn tree_path_reverses(n in 2usize..=30, seed in any::<u64>(), picks in any::<(u32, u32)>()) {
        let g = instances::random_connected(n, 0.0, seed);
        let t = SpanningTree::build(&g, &g.edges()).unwrap();
        let u = picks.0 as usize % n;
        let v = picks.1 as usize % n;
        let mut forward = t.path_between(u, v);
        forward.reverse();
        prop_assert_eq!(forward, t.path_between(v, u));
    }

    #[test]
    fn bound_checks_monotone_in_k(n in 2usize..=40, seed in any::<u64>(), k in 1usize..=10) {
        let g = instances::random_connected(n, 0.0, seed);
        let stats = SpanningTree::build(&g, &g.edges()).unwrap().stats();
        let now = stats.check_bounds(k);
        let next = stats.check_bounds(k + 1);
        if now.all_ok() {
            prop_assert!(next.all_ok());
        }
    }

    #[test]
    fn enumeration_count_and_validity(n in 2usize..=6, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask as u64);
        prop_assume!(g.is_connected());
        let count = oracle::spanning_tree_count(&g).unwrap();
        let trees: Vec<_> = oracle::enumerate_spanning_trees(&g, 1_000_000)
            .unwrap()
            .collect();
        prop_assert_eq!(BigUint::from(trees.len()), count);
        let distinct: BTreeSet<_> = trees.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), trees.len());
        for tree in &trees {
            SpanningTree::build(&g, tree).unwrap();
        }
    }

    #[test]
    fn min_leaves_2_iff_hamilton_path(n in 2usize..=6, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask as u64);
        prop_assume!(g.is_connected());
        let r = oracle::oracle_min(&g, 1_000_000).unwrap();
        prop_assert_eq!(r.min_leaves == 2, has_hamilton_path(&g));
    }

    #[test]
    fn oracle_minima_monotone_under_edge_addition(n in 3usize..=6, mask in any::<u32>()) {
        let g = graph_from_mask(n, mask as u64);
        prop_assume!(g.is_connected());
        let missing = pairs(n).into_iter().find(|&(u, v)| !g.has_edge(u, v));
        prop_assume!(missing.is_some());
        let (u, v) = missing.unwrap();
        let mut edges = g.edges();
        edges.push((u, v));
        let bigger = Graph::from_edges(n, edges);
        let before = oracle::oracle_min(&g, 1_000_000).unwrap();
        let after = oracle::oracle_min(&bigger, 1_000_000).unwrap();
        prop_assert!(after.min_leaves <= before.min_leaves);
        prop_assert!(after.min_branch <= before.min_branch);
        prop_assert!(after.min_branch_degree_sum <= before.min_branch_degree_sum);
    }

    #[test]
    fn candidate_moves_apply_to_valid_trees(n in 3usize..=10, seed in any::<u64>(), p in 0.0f64..=0.6) {
        let g = instances::random_connected(n, p, seed);
        let state = SearchState::from_tree(search::initial_tree(&g, seed).unwrap());
        for mv in search::candidate_moves(&state) {
            let t = search::apply_move(&state.tree, &mv).unwrap();
            prop_assert_eq!(t.edges().len(), n - 1);
        }
    }

    #[test]
    fn optimize_outcome_is_stuck_and_reproducible(n in 3usize..=12, seed in any::<u64>(), p in 0.0f64..=0.6) {
        let g = instances::random_connected(n, p, seed);
        let cfg = SearchConfig { seed, ..SearchConfig::default() };
        let a = search::optimize(&g, &cfg).unwrap();
        let b = search::optimize(&g, &cfg).unwrap();
        prop_assert_eq!(a.tree.edges(), b.tree.edges());
        prop_assert_eq!(a.iterations, b.iterations);
        prop_assert_eq!(a.certified, b.certified);
        let state = SearchState::from_tree(a.tree);
        prop_assert!(search::is_stuck(&state).unwrap());
        if let Some(report) = search::stuck_state_invariant(&state) {
            prop_assert!(report.pass(), "violations: {:?}", report.violations());
        }
    }

    #[test]
    fn random_ore_postcondition(n in 3usize..=12, k in 1usize..=4, seed in any::<u64>()) {
        prop_assume!(k < n);
        let g = instances::random_ore(n, k, seed);
        prop_assert!(instances::meets_ore_condition(&g, k));
        prop_assert!(g.is_connected());
        // Deterministic in the full parameter tuple.
        prop_assert_eq!(g, instances::random_ore(n, k, seed));
    }
}
