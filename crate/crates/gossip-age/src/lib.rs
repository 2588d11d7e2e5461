//! Version age of information (vAoI) on gossip networks.
//!
//! A source node refreshes its own version at rate `lambda_e` and pushes the
//! current version to each of `n` network nodes at rate `lambda / n`. Nodes
//! relay whatever version they hold to each neighbor at rate
//! `lambda / deg(i)`, so every non-isolated node gossips at total rate
//! `lambda`. The version age of a set `S` is the limiting time average of
//! `X_S(t) = min_{j in S} X_j(t)`, where `X_j` counts how many versions node
//! `j` lags behind the source.
//!
//! The crate computes that quantity three independent ways and cross-checks
//! them against each other and against closed-form bounds:
//!
//! * [`exact`] - the full subset recursion, solved over all `2^n - 1`
//!   nonempty subsets (feasible to `n = 20`).
//! * [`structured`] - collapsed recursions for graphs whose symmetry reduces
//!   the subset lattice: complete bipartite grids, cliques, empty graphs.
//! * [`sim`] - a discrete-event Monte Carlo simulator with exact piecewise-
//!   constant age integration and batch-means error estimates.
//! * [`bounds`] - closed-form bound evaluators (bipartite log bounds,
//!   d-regular expander sums, digamma, G(n,p) singleton bounds, isolated-
//!   vertex statistics, Chernoff tails).
//! * [`graph`] - graph construction, random models, and expansion probes
//!   shared by everything above.
//! * [`experiments`] - reproducible sweep harnesses emitting CSV.
//!
//! Every stochastic entry point takes an explicit `u64` seed and is
//! reproducible bit for bit given the same seed and parameters.

pub mod bounds;
pub mod exact;
pub mod experiments;
pub mod export;
pub mod graph;
pub mod rates;
pub mod rng;
pub mod sim;
pub mod structured;

pub use graph::{Graph, VertexSet};
pub use rates::GossipRates;

/// Errors reported by fallible operations across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter violated an operation's documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The graph is too large for an exhaustive operation.
    #[error("{what} supports at most {limit} vertices, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// An edge-list file or stream did not parse.
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for [`Error::InvalidParameter`].
    pub fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
