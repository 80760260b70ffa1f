//! Secrecy rate-equivocation regions of cooperative relay broadcast channels.
//!
//! - [`gaussian`]: closed-form achievable equivocation rates of the Gaussian
//!   relaying, dirty-paper, jamming and two-sided schemes, their
//!   compression-noise constraints, and the Sato-type outer bound.
//! - [`dmc`]: finite-alphabet evaluation of the inner and outer bounds from
//!   explicit distributions, degradedness tests, and the text file formats.
//! - [`frontier`]: parameter sweeps and Pareto frontiers of `(R_e1, R_e2)`.
//! - [`acceptance`]: the numeric acceptance suite shared by the test target and
//!   the `verify` command.

pub mod acceptance;
pub mod dmc;
pub mod frontier;
pub mod gaussian;
