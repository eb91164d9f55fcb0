//! Spanning trees with few leaves and few branch vertices.
//!
//! Given a connected graph whose Ore parameter `sigma2` (minimum degree sum
//! over nonadjacent vertex pairs) satisfies `sigma2 >= n - k + 1`, there is a
//! spanning tree with at most `k - b + 1` leaves (where `b` is its number of
//! branch vertices), at most `(k - 1) / 2` branch vertices, and branch degree
//! sum at most `3(k - 1) / 2`. This crate provides:
//!
//! * [`graph`] — simple undirected graphs, edge-list parsing, and the Ore
//!   parameters `sigma2` and `k_min`;
//! * [`tree`] — validated spanning trees, leaf/branch statistics, and the
//!   bound checker;
//! * [`search`] — a lexicographic local search that synthesizes a tree
//!   certifying all three bounds via rotation/exchange moves;
//! * [`oracle`] — exact spanning-tree counting and enumeration for
//!   brute-force cross-checks on small graphs;
//! * [`instances`] — generators for the sharp families and random corpora.

pub mod graph;
pub mod instances;
pub mod oracle;
pub mod search;
pub mod tree;

pub use graph::{Graph, OreProfile, ParseError, Parsed, Sigma2};
pub use search::{optimize, SearchConfig, SearchError, SearchOutcome};
pub use tree::{BoundReport, SpanningTree, TreeError, TreeStats};
