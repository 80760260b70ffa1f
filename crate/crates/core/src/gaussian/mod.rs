//! Closed-form Gaussian evaluators.
//!
//! The single-sided channel is `Y1 = X + Z1`, `Y2 = X + X1 + Z2` with
//! `E[X^2] <= P`, `E[X1^2] <= aP`; the two-sided channel adds `X2` to `Y1`
//! with power `a2 P`. All rates are in bits per channel use.
//!
//! Schemes `prop1`..`prop4` are single-sided (relaying, relaying with dirty
//! paper coding, jamming + relaying, and jamming + relaying with dirty paper
//! coding); `prop5` is the two-sided jam + relay scheme.

mod bounds;
mod nc;
mod schemes;
mod two_sided;

pub use bounds::{
    corollary1_limit, gaussian_sato_bound, jamming_threshold, sato_objective, wiretap_secrecy,
};
pub use nc::QuadraticNcBound;
pub use schemes::{
    prop1_bounds, prop1_min_nc, prop1_rates, prop2_bounds, prop2_min_nc, prop2_rates, prop3_bounds,
    prop3_min_nc, prop3_rates, prop4_bounds, prop4_min_nc, prop4_rates,
};
pub use two_sided::{prop5_bounds, prop5_min_ncs, prop5_rates};

use thiserror::Error;

/// Errors from the Gaussian evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaussianError {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("no feasible compression noise: {0}")]
    Infeasible(&'static str),
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<(), GaussianError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(GaussianError::InvalidParameter {
            name,
            value,
            reason: "must be finite and > 0",
        })
    }
}

pub(crate) fn check_nonnegative(name: &'static str, value: f64) -> Result<(), GaussianError> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(GaussianError::InvalidParameter {
            name,
            value,
            reason: "must be finite and >= 0",
        })
    }
}

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<(), GaussianError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(GaussianError::InvalidParameter {
            name,
            value,
            reason: "must lie in [0, 1]",
        })
    }
}

pub(crate) fn check_finite(name: &'static str, value: f64) -> Result<(), GaussianError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(GaussianError::InvalidParameter {
            name,
            value,
            reason: "must be finite",
        })
    }
}

/// `nc` may be `+inf` (no relay help at all), but never negative or NaN.
pub(crate) fn check_nc(name: &'static str, value: f64) -> Result<(), GaussianError> {
    if value >= 0.0 {
        Ok(())
    } else {
        Err(GaussianError::InvalidParameter {
            name,
            value,
            reason: "must be >= 0",
        })
    }
}

/// Single-sided Gaussian channel parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianCrbcParams {
    p: f64,
    a: f64,
    n1: f64,
    n2: f64,
}

impl GaussianCrbcParams {
    pub fn new(p: f64, a: f64, n1: f64, n2: f64) -> Result<Self, GaussianError> {
        check_positive("P", p)?;
        check_nonnegative("a", a)?;
        check_positive("N1", n1)?;
        check_positive("N2", n2)?;
        Ok(Self { p, a, n1, n2 })
    }

    /// Transmitter power.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Relay power ratio: user 1 transmits with power `a * P`.
    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn n1(&self) -> f64 {
        self.n1
    }

    pub fn n2(&self) -> f64 {
        self.n2
    }

    pub fn with_a(&self, a: f64) -> Result<Self, GaussianError> {
        Self::new(self.p, a, self.n1, self.n2)
    }
}

/// Two-sided Gaussian channel parameters: both users can relay and jam.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSidedGaussianParams {
    p: f64,
    a1: f64,
    a2: f64,
    n1: f64,
    n2: f64,
}

impl TwoSidedGaussianParams {
    pub fn new(p: f64, a1: f64, a2: f64, n1: f64, n2: f64) -> Result<Self, GaussianError> {
        check_positive("P", p)?;
        check_nonnegative("a1", a1)?;
        check_nonnegative("a2", a2)?;
        check_positive("N1", n1)?;
        check_positive("N2", n2)?;
        Ok(Self { p, a1, a2, n1, n2 })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn a2(&self) -> f64 {
        self.a2
    }

    pub fn n1(&self) -> f64 {
        self.n1
    }

    pub fn n2(&self) -> f64 {
        self.n2
    }

    pub fn with_a(&self, a1: f64, a2: f64) -> Result<Self, GaussianError> {
        Self::new(self.p, a1, a2, self.n1, self.n2)
    }
}

/// Unclamped equivocation expressions of a scheme, in bits.
///
/// Either entry may be negative or `-inf`; the positivity operator is applied
/// by [`RateBounds::clamp`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateBounds {
    pub re1: f64,
    pub re2: f64,
}

impl RateBounds {
    pub fn clamp(self, feasible: bool) -> EquivocationPair {
        EquivocationPair {
            re1: positive(self.re1),
            re2: positive(self.re2),
            feasible,
        }
    }
}

/// Achievable `(R_e1, R_e2)` with the compression feasibility flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivocationPair {
    pub re1: f64,
    pub re2: f64,
    /// Whether the compression noise satisfies the relay-link constraint.
    /// `re1` never depends on it; `re2` is only achievable when it holds.
    pub feasible: bool,
}

/// Free parameters of one scheme evaluation.
///
/// `beta` is the fraction of the relay power spent on the help signal; the
/// rest (`1 - beta`) is jamming noise. `beta = 1` is pure relaying.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchemeParams {
    Prop1 {
        alpha: f64,
        nc: f64,
    },
    Prop2 {
        alpha: f64,
        gamma: f64,
        nc: f64,
    },
    Prop3 {
        alpha: f64,
        beta: f64,
        nc: f64,
    },
    Prop4 {
        alpha: f64,
        beta: f64,
        gamma: f64,
        nc: f64,
    },
    Prop5 {
        alpha: f64,
        beta1: f64,
        beta2: f64,
        nc1: f64,
        nc2: f64,
    },
}

impl SchemeParams {
    pub fn alpha(&self) -> f64 {
        match *self {
            SchemeParams::Prop1 { alpha, .. }
            | SchemeParams::Prop2 { alpha, .. }
            | SchemeParams::Prop3 { alpha, .. }
            | SchemeParams::Prop4 { alpha, .. }
            | SchemeParams::Prop5 { alpha, .. } => alpha,
        }
    }

    /// Help fraction; schemes without jamming report 1.
    pub fn beta(&self) -> f64 {
        match *self {
            SchemeParams::Prop3 { beta, .. } | SchemeParams::Prop4 { beta, .. } => beta,
            SchemeParams::Prop5 { beta1, .. } => beta1,
            _ => 1.0,
        }
    }

    /// DPC coefficient; schemes without dirty paper coding report 0.
    pub fn gamma(&self) -> f64 {
        match *self {
            SchemeParams::Prop2 { gamma, .. } | SchemeParams::Prop4 { gamma, .. } => gamma,
            _ => 0.0,
        }
    }

    pub fn nc(&self) -> f64 {
        match *self {
            SchemeParams::Prop1 { nc, .. }
            | SchemeParams::Prop2 { nc, .. }
            | SchemeParams::Prop3 { nc, .. }
            | SchemeParams::Prop4 { nc, .. } => nc,
            SchemeParams::Prop5 { nc1, .. } => nc1,
        }
    }

    /// All parameters as a flat tuple, used for deterministic ordering.
    pub fn key(&self) -> [f64; 5] {
        match *self {
            SchemeParams::Prop1 { alpha, nc } => [alpha, 1.0, 0.0, nc, 0.0],
            SchemeParams::Prop2 { alpha, gamma, nc } => [alpha, 1.0, gamma, nc, 0.0],
            SchemeParams::Prop3 { alpha, beta, nc } => [alpha, beta, 0.0, nc, 0.0],
            SchemeParams::Prop4 {
                alpha,
                beta,
                gamma,
                nc,
            } => [alpha, beta, gamma, nc, 0.0],
            SchemeParams::Prop5 {
                alpha,
                beta1,
                beta2,
                nc1,
                nc2,
            } => [alpha, beta1, beta2, nc1, nc2],
        }
    }
}

pub(crate) fn positive(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        0.0
    }
}

/// `0.5 * log2(1 + x)`, with `x = +inf` mapping to `+inf`.
pub(crate) fn half_log2_1p(x: f64) -> f64 {
    0.5 * x.ln_1p() / std::f64::consts::LN_2
}

/// `num / den` for nonnegative operands where a vanishing signal over a
/// vanishing noise carries no information (`0/0 = 0`).
pub(crate) fn snr(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else if den == 0.0 {
        f64::INFINITY
    } else {
        num / den
    }
}
