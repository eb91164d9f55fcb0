//! The JSON report document. One schema for every subcommand; blocks the
//! command did not compute are omitted. Identical inputs and flags produce
//! byte-identical documents.

use serde::{Serialize, Serializer};

use oretree_core::graph::{OreProfile, Sigma2};
use oretree_core::search::SearchOutcome;
use oretree_core::tree::{BoundReport, SpanningTree, TreeStats};

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub input: InputBlock,
    pub profile: ProfileBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid_spanning_tree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<TreeBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub move_log: Option<Vec<String>>,
}

impl Report {
    pub fn new(command: &'static str, input: InputBlock, profile: ProfileBlock) -> Self {
        Report {
            schema: 1,
            command,
            input,
            profile,
            valid_spanning_tree: None,
            tree: None,
            bounds: None,
            search: None,
            oracle: None,
            move_log: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Serialize)]
pub struct InputBlock {
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duplicate_edges_collapsed: Option<usize>,
}

/// `sigma2` renders as a JSON number, or the string "infinity".
pub struct SigmaValue(pub Sigma2);

impl Serialize for SigmaValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Sigma2::Finite(s) => serializer.serialize_u64(s as u64),
            Sigma2::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

#[derive(Serialize)]
pub struct ProfileBlock {
    pub sigma2: SigmaValue,
    pub k_min: usize,
    /// Every certified tree has at most `k + 1` leaves and branch vertices
    /// altogether.
    pub max_leaves_plus_branches: i64,
    pub max_branch_vertices: i64,
    /// Doubled to stay integral; the displayed value is exact.
    pub max_branch_degree_sum_x2: i64,
    pub max_branch_degree_sum: String,
}

impl ProfileBlock {
    pub fn from_profile(profile: &OreProfile) -> Self {
        let k = profile.k_min as i64;
        ProfileBlock {
            sigma2: SigmaValue(profile.sigma2),
            k_min: profile.k_min,
            max_leaves_plus_branches: k + 1,
            max_branch_vertices: (k - 1).div_euclid(2),
            max_branch_degree_sum_x2: 3 * (k - 1),
            max_branch_degree_sum: exact_half(3 * (k - 1)),
        }
    }
}

/// Renders `x2 / 2` exactly in decimal ("6" or "4.5").
fn exact_half(x2: i64) -> String {
    if x2 % 2 == 0 {
        format!("{}", x2 / 2)
    } else {
        format!("{}.5", x2 / 2)
    }
}

#[derive(Serialize)]
pub struct TreeBlock {
    pub edges: Vec<(usize, usize)>,
    pub leaf_count: usize,
    pub branch_vertices: Vec<usize>,
    pub branch_count: usize,
    pub branch_degree_sum: usize,
    pub diameter_len: usize,
}

impl TreeBlock {
    pub fn from_tree(tree: &SpanningTree, stats: &TreeStats) -> Self {
        TreeBlock {
            edges: tree.edges(),
            leaf_count: stats.leaf_count,
            branch_vertices: stats.branch_vertices.clone(),
            branch_count: stats.branch_count(),
            branch_degree_sum: stats.branch_degree_sum,
            diameter_len: stats.diameter_path.len(),
        }
    }
}

#[derive(Serialize)]
pub struct BoundsBlock {
    pub k: usize,
    pub max_leaves: i64,
    pub leaves_ok: bool,
    pub max_branch_vertices: i64,
    pub branch_ok: bool,
    pub max_degree_sum_x2: i64,
    pub degree_sum_ok: bool,
    pub all_ok: bool,
}

impl BoundsBlock {
    pub fn from_report(r: &BoundReport) -> Self {
        BoundsBlock {
            k: r.k,
            max_leaves: r.max_leaves,
            leaves_ok: r.leaves_ok,
            max_branch_vertices: r.max_branch_vertices,
            branch_ok: r.branch_ok,
            max_degree_sum_x2: r.max_degree_sum_x2,
            degree_sum_ok: r.degree_sum_ok,
            all_ok: r.all_ok(),
        }
    }
}

#[derive(Serialize)]
pub struct SearchBlock {
    pub seed: u64,
    pub iterations: usize,
    pub restarts_used: usize,
    pub certified: bool,
}

impl SearchBlock {
    pub fn from_outcome(outcome: &SearchOutcome, seed: u64) -> Self {
        SearchBlock {
            seed,
            iterations: outcome.iterations,
            restarts_used: outcome.restarts_used,
            certified: outcome.certified,
        }
    }
}

#[derive(Serialize)]
pub struct OracleBlock {
    /// Decimal string: counts overflow fixed-width JSON numbers quickly.
    pub tree_count: String,
    pub min_leaves: usize,
    pub min_branch_vertices: usize,
    pub min_branch_degree_sum: usize,
}
