//! Interpolation reductions between the counting problems.
//!
//! Each pipeline builds derived instances, asks a [`CountingOracle`] about
//! them, and recovers the target count from the answers. Pipelines return a
//! [`ReductionTrace`] alongside the value so that every intermediate step can
//! be inspected.

mod linalg;
mod pipelines;

pub use linalg::{
    binomial_matrix, clone_matrix, counts_to_rationals, solve_exact, to_counts, ExactMatrix, ExactVector,
};
pub use pipelines::{
    bis_via_summation, clique_gadget, clique_gadget_identity, cliques_via_complement, domsets_via_lis,
    kbis_to_clique, maxis_via_maxlis, rainbow_via_is_k, split_graph, CliqueGadget, Summation,
};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fptcount::BoundedCounter;
use crate::graph::BipartiteGraph;
use crate::oracle::{Brute, Guards};
use crate::Count;

/// Answers `IS_k`, `LIS_l` and `MAXLIS_l` queries on bipartite graphs.
pub trait CountingOracle {
    fn name(&self) -> &str;
    fn is_k(&self, g: &BipartiteGraph, k: usize) -> Result<Count>;
    fn lis(&self, g: &BipartiteGraph, ell: usize) -> Result<Count>;
    /// `(μ_l(G), MAXLIS_l(G))`.
    fn maxlis(&self, g: &BipartiteGraph, ell: usize) -> Result<(usize, Count)>;
}

/// Exhaustive enumeration. `IS_k` enumerates all vertex subsets; `LIS_l` and
/// `MAXLIS_l` enumerate only the `C(|U|, l)` left parts, which keeps the
/// wide instances built by the cloning reductions tractable.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExhaustiveOracle {
    pub brute: Brute,
}

impl ExhaustiveOracle {
    pub fn new(guards: Guards) -> Self {
        Self { brute: Brute::new(guards) }
    }
}

impl CountingOracle for ExhaustiveOracle {
    fn name(&self) -> &str {
        "exhaustive"
    }

    fn is_k(&self, g: &BipartiteGraph, k: usize) -> Result<Count> {
        self.brute.is_k(g, k)
    }

    fn lis(&self, g: &BipartiteGraph, ell: usize) -> Result<Count> {
        self.brute.lis_by_left(g, ell)
    }

    fn maxlis(&self, g: &BipartiteGraph, ell: usize) -> Result<(usize, Count)> {
        self.brute.maxlis_by_left(g, ell)
    }
}

/// The bounded-degree exact counters; fails on instances above the degree bound.
#[derive(Clone, Copy, Debug)]
pub struct BoundedDegreeOracle {
    pub delta: usize,
}

impl CountingOracle for BoundedDegreeOracle {
    fn name(&self) -> &str {
        "bounded-degree"
    }

    fn is_k(&self, g: &BipartiteGraph, k: usize) -> Result<Count> {
        BoundedCounter::new(g, self.delta)?.is_k(k)
    }

    fn lis(&self, g: &BipartiteGraph, ell: usize) -> Result<Count> {
        BoundedCounter::new(g, self.delta)?.lis(ell)
    }

    fn maxlis(&self, g: &BipartiteGraph, ell: usize) -> Result<(usize, Count)> {
        BoundedCounter::new(g, self.delta)?.maxlis(ell)
    }
}

/// Size summary of one constructed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub label: String,
    pub n_left: usize,
    pub n_right: usize,
    pub edges: usize,
}

impl InstanceSummary {
    pub fn of(label: impl Into<String>, g: &BipartiteGraph) -> Self {
        Self { label: label.into(), n_left: g.n_left(), n_right: g.n_right(), edges: g.edge_count() }
    }
}

/// Audit record of one pipeline run. Counts are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub reduction: String,
    pub oracle: String,
    pub parameters: serde_json::Value,
    pub instances: Vec<InstanceSummary>,
    pub oracle_answers: Vec<String>,
    pub matrix: Option<Vec<Vec<String>>>,
    pub solution: Vec<String>,
    pub result: String,
}

impl ReductionTrace {
    fn new(reduction: &str, oracle: &str, parameters: serde_json::Value) -> Self {
        Self {
            reduction: reduction.into(),
            oracle: oracle.into(),
            parameters,
            instances: Vec::new(),
            oracle_answers: Vec::new(),
            matrix: None,
            solution: Vec::new(),
            result: String::new(),
        }
    }
}

/// Value recovered by a pipeline, with its trace.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub value: Count,
    pub trace: ReductionTrace,
}
