//! Exact and approximate counting of independent sets in bipartite graphs.
//!
//! The crate is organised around a handful of layers:
//!
//! * [`graph`]: bipartite, plain and vertex-coloured graphs, file formats and
//!   random instance generators.
//! * [`canon`]: canonical forms for small coloured patterns.
//! * [`oracle`]: exhaustive reference counters used as ground truth.
//! * [`fptras`]: the sampling approximation scheme for size-`k` independent sets.
//! * [`homcount`]: coloured homomorphism counting in bounded-degree hosts.
//! * [`colsub`]: induced coloured subgraph counting via the Hom-to-Ind transform.
//! * [`fptcount`]: bounded-degree exact counters for `IS_k`, `LIS_l` and `MAXLIS_l`.
//! * [`reductions`]: interpolation-based reductions between the counting problems.

pub mod canon;
pub mod colsub;
pub mod error;
pub mod fptcount;
pub mod fptras;
pub mod graph;
pub mod homcount;
pub mod math;
pub mod oracle;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, ColouredGraph, Graph, MaxDegree};

/// Exact non-negative count. Every counting routine in the crate returns one.
pub type Count = num_bigint::BigUint;
