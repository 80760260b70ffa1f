//! Finite-alphabet evaluation of the rate-equivocation bounds.
//!
//! Distributions are materialized as dense tensors. Inner bounds are computed
//! from explicit factored input distributions ([`RelayFactors`],
//! [`JamRelayFactors`], [`TwoSidedFactors`]); outer bounds from an explicit
//! auxiliary joint or by grid search over the channel input distribution.

mod channel;
mod factors;
pub mod format;
mod info;
mod inner;
mod outer;
pub mod sample;

pub use channel::DmcSpec;
pub use factors::{JamRelayFactors, RelayFactors, Table, TwoSidedFactors};
pub use info::{cond_mutual_info, entropy, Joint};
pub use inner::{
    eval_theorem1, eval_theorem1_with, eval_theorem4, eval_theorem4_with, eval_theorem5,
    eval_theorem5_with, EvalConfig, RegionEvaluation,
};
pub use outer::{
    eval_theorem2_point, eval_theorem3, maximize_theorem3, maximize_theorem3_seeded,
    secrecy_capacity_reverse_degraded, OuterPoint, Theorem3Max, MAX_GRID_POINTS,
};

use thiserror::Error;

/// Row-sum tolerance for probability tables.
pub const NORMALIZATION_TOL: f64 = 1e-9;
/// Probabilities at or below this are structural zeros.
pub const ZERO_PROB: f64 = 1e-15;
/// Default cap on the number of cells of a materialized joint.
pub const DEFAULT_CELL_CAP: usize = 10_000_000;
/// Tolerance for Markov-chain and degradedness checks.
pub const MARKOV_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DmcError {
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("joint distribution exceeds the cap of {cap} cells")]
    TooLarge { cap: usize },
    #[error("Markov chain violated: {0}")]
    MarkovViolation(String),
    #[error("channel is not reverse-degraded: {0}")]
    NotReverseDegraded(String),
    #[error("grid of {points} points exceeds the limit of {limit}")]
    GridTooLarge { points: f64, limit: usize },
}
