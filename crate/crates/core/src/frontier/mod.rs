//! Parameter sweeps over the Gaussian schemes and Pareto frontiers of the
//! resulting `(R_e1, R_e2)` pairs.
//!
//! A frontier is computed by evaluating a lexicographic grid over the free
//! parameters (in parallel, order-preserving), discarding points without a
//! feasible compression noise, filtering to the nondominated set, and polishing
//! each surviving point by coordinate ascent.

mod pareto;
mod sweep;

pub use pareto::{pareto_filter, DOMINANCE_EPS};
pub use sweep::{evaluate, frontier, refine_point, sweep, trace_family, GridPoint};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gaussian::{GaussianCrbcParams, GaussianError, SchemeParams, TwoSidedGaussianParams};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrontierError {
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Gaussian(#[from] GaussianError),
}

/// The five Gaussian schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Relaying, independent inputs.
    Prop1,
    /// Relaying with dirty paper coding.
    Prop2,
    /// Jamming and relaying, independent inputs.
    Prop3,
    /// Jamming and relaying with dirty paper coding.
    Prop4,
    /// Two-sided jamming and relaying.
    Prop5,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Scheme::Prop1,
        Scheme::Prop2,
        Scheme::Prop3,
        Scheme::Prop4,
        Scheme::Prop5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Prop1 => "prop1",
            Scheme::Prop2 => "prop2",
            Scheme::Prop3 => "prop3",
            Scheme::Prop4 => "prop4",
            Scheme::Prop5 => "prop5",
        }
    }

    pub fn is_two_sided(self) -> bool {
        self == Scheme::Prop5
    }

    fn has_beta(self) -> bool {
        matches!(self, Scheme::Prop3 | Scheme::Prop4 | Scheme::Prop5)
    }

    fn has_gamma(self) -> bool {
        matches!(self, Scheme::Prop2 | Scheme::Prop4)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = FrontierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scheme::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| FrontierError::Config(format!("unknown scheme `{s}`")))
    }
}

/// How the compression noise is chosen at each grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NcPolicy {
    /// Smallest feasible value (the best choice for user 2).
    Min,
    /// A fixed value; grid points where it is infeasible are dropped. For the
    /// two-sided scheme it is used for both relays.
    Explicit(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub scheme: Scheme,
    pub alpha_points: usize,
    /// Used for `beta` and for both `beta1`, `beta2`.
    pub beta_points: usize,
    pub gamma_points: usize,
    pub gamma_range: (f64, f64),
    pub nc: NcPolicy,
    pub refine_passes: usize,
}

impl SweepConfig {
    pub fn new(scheme: Scheme) -> Self {
        Self {
            scheme,
            alpha_points: 101,
            beta_points: 51,
            gamma_points: 81,
            gamma_range: (-2.0, 2.0),
            nc: NcPolicy::Min,
            refine_passes: 20,
        }
    }

    pub fn validate(&self) -> Result<(), FrontierError> {
        let mut used = vec![("alpha", self.alpha_points)];
        if self.scheme.has_beta() {
            used.push(("beta", self.beta_points));
        }
        if self.scheme.has_gamma() {
            used.push(("gamma", self.gamma_points));
        }
        for (name, n) in used {
            if n < 2 {
                return Err(FrontierError::Config(format!(
                    "{name} grid needs at least 2 points, got {n}"
                )));
            }
        }
        let (lo, hi) = self.gamma_range;
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(FrontierError::Config(format!(
                "gamma range [{lo}, {hi}] must be finite and ordered"
            )));
        }
        if let NcPolicy::Explicit(nc) = self.nc {
            if nc.is_nan() || nc < 0.0 {
                return Err(FrontierError::Config(format!("nc = {nc} must be >= 0")));
            }
        }
        Ok(())
    }
}

/// Channel parameters for a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelParams {
    OneSided(GaussianCrbcParams),
    TwoSided(TwoSidedGaussianParams),
}

/// Relay power ratio(s) of one frontier family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RelayPower {
    Single(f64),
    Pair(f64, f64),
}

impl ChannelParams {
    pub fn power(&self) -> RelayPower {
        match self {
            ChannelParams::OneSided(p) => RelayPower::Single(p.a()),
            ChannelParams::TwoSided(p) => RelayPower::Pair(p.a1(), p.a2()),
        }
    }

    pub fn with_power(&self, power: RelayPower) -> Result<Self, FrontierError> {
        match (self, power) {
            (ChannelParams::OneSided(p), RelayPower::Single(a)) => {
                Ok(ChannelParams::OneSided(p.with_a(a)?))
            }
            (ChannelParams::TwoSided(p), RelayPower::Pair(a1, a2)) => {
                Ok(ChannelParams::TwoSided(p.with_a(a1, a2)?))
            }
            _ => Err(FrontierError::Mismatch(
                "relay power does not match the channel (one value per relay)".into(),
            )),
        }
    }
}

/// One nondominated `(R_e1, R_e2)` pair and the parameters achieving it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontierPoint {
    pub power: RelayPower,
    pub params: SchemeParams,
    pub re1: f64,
    pub re2: f64,
}

/// The frontier of one relay-power family.
#[derive(Debug, Clone, PartialEq)]
pub struct Frontier {
    pub power: RelayPower,
    /// Sorted by `re1` ascending.
    pub points: Vec<FrontierPoint>,
}
