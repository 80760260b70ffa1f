use super::info::checked_volume;
use super::{DmcError, DEFAULT_CELL_CAP, MARKOV_TOL, NORMALIZATION_TOL, ZERO_PROB};

/// Transition tensor `p(y1, y2 | x, x1)`, or `p(y1, y2 | x, x1, x2)` for the
/// two-sided model. Stored in row-major order over `(x, x1, x2, y1, y2)`;
/// one-sided channels have `|X2| = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DmcSpec {
    nx: usize,
    nx1: usize,
    nx2: usize,
    ny1: usize,
    ny2: usize,
    two_sided: bool,
    probs: Vec<f64>,
}

impl DmcSpec {
    pub fn one_sided(
        nx: usize,
        nx1: usize,
        ny1: usize,
        ny2: usize,
        probs: Vec<f64>,
    ) -> Result<Self, DmcError> {
        Self::build(nx, nx1, 1, ny1, ny2, false, probs)
    }

    pub fn two_sided(
        nx: usize,
        nx1: usize,
        nx2: usize,
        ny1: usize,
        ny2: usize,
        probs: Vec<f64>,
    ) -> Result<Self, DmcError> {
        Self::build(nx, nx1, nx2, ny1, ny2, true, probs)
    }

    /// One-sided channel from `f(x, x1, y1, y2)`.
    pub fn from_fn(
        nx: usize,
        nx1: usize,
        ny1: usize,
        ny2: usize,
        mut f: impl FnMut(usize, usize, usize, usize) -> f64,
    ) -> Result<Self, DmcError> {
        let mut probs = Vec::with_capacity(nx * nx1 * ny1 * ny2);
        for x in 0..nx {
            for x1 in 0..nx1 {
                for y1 in 0..ny1 {
                    for y2 in 0..ny2 {
                        probs.push(f(x, x1, y1, y2));
                    }
                }
            }
        }
        Self::one_sided(nx, nx1, ny1, ny2, probs)
    }

    /// Two-sided channel from `f(x, x1, x2, y1, y2)`.
    pub fn two_sided_from_fn(
        nx: usize,
        nx1: usize,
        nx2: usize,
        ny1: usize,
        ny2: usize,
        mut f: impl FnMut(usize, usize, usize, usize, usize) -> f64,
    ) -> Result<Self, DmcError> {
        let mut probs = Vec::with_capacity(nx * nx1 * nx2 * ny1 * ny2);
        for x in 0..nx {
            for x1 in 0..nx1 {
                for x2 in 0..nx2 {
                    for y1 in 0..ny1 {
                        for y2 in 0..ny2 {
                            probs.push(f(x, x1, x2, y1, y2));
                        }
                    }
                }
            }
        }
        Self::two_sided(nx, nx1, nx2, ny1, ny2, probs)
    }

    fn build(
        nx: usize,
        nx1: usize,
        nx2: usize,
        ny1: usize,
        ny2: usize,
        two_sided: bool,
        probs: Vec<f64>,
    ) -> Result<Self, DmcError> {
        let dims = [nx, nx1, nx2, ny1, ny2];
        if dims.contains(&0) {
            return Err(DmcError::Shape("alphabet sizes must be at least 1".into()));
        }
        let cells = checked_volume(&dims, DEFAULT_CELL_CAP)?;
        if probs.len() != cells {
            return Err(DmcError::Shape(format!(
                "channel needs {cells} entries, got {}",
                probs.len()
            )));
        }
        if let Some(p) = probs.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
            return Err(DmcError::InvalidDistribution(format!(
                "transition probability {p} is negative or not finite"
            )));
        }
        let row = ny1 * ny2;
        for (r, slice) in probs.chunks(row).enumerate() {
            let total: f64 = slice.iter().sum();
            if (total - 1.0).abs() > NORMALIZATION_TOL {
                let (x, rest) = (r / (nx1 * nx2), r % (nx1 * nx2));
                return Err(DmcError::InvalidDistribution(format!(
                    "row x={x} x1={} x2={} sums to {total}",
                    rest / nx2,
                    rest % nx2
                )));
            }
        }
        Ok(Self {
            nx,
            nx1,
            nx2,
            ny1,
            ny2,
            two_sided,
            probs,
        })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }
    pub fn nx1(&self) -> usize {
        self.nx1
    }
    pub fn nx2(&self) -> usize {
        self.nx2
    }
    pub fn ny1(&self) -> usize {
        self.ny1
    }
    pub fn ny2(&self) -> usize {
        self.ny2
    }
    pub fn is_two_sided(&self) -> bool {
        self.two_sided
    }
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// `p(y1, y2 | x, x1, x2)`.
    #[inline]
    pub fn p(&self, x: usize, x1: usize, x2: usize, y1: usize, y2: usize) -> f64 {
        let r = (x * self.nx1 + x1) * self.nx2 + x2;
        self.probs[(r * self.ny1 + y1) * self.ny2 + y2]
    }

    /// True when `X -> (X1, Y1) -> Y2`: `p(y2 | x, x1, y1)` does not depend on
    /// `x` wherever `(x, x1, y1)` has positive probability. For two-sided
    /// channels `X2` is treated as part of the relay input.
    pub fn is_degraded(&self) -> bool {
        self.output_given_other_is_constant(true)
    }

    /// True when `X -> (X1, Y2) -> Y1`.
    pub fn is_reverse_degraded(&self) -> bool {
        self.output_given_other_is_constant(false)
    }

    fn output_given_other_is_constant(&self, observe_y1: bool) -> bool {
        let (n_obs, n_out) = if observe_y1 {
            (self.ny1, self.ny2)
        } else {
            (self.ny2, self.ny1)
        };
        let cell = |x, x1, x2, obs, out| {
            if observe_y1 {
                self.p(x, x1, x2, obs, out)
            } else {
                self.p(x, x1, x2, out, obs)
            }
        };
        for x1 in 0..self.nx1 {
            for x2 in 0..self.nx2 {
                for obs in 0..n_obs {
                    let mut reference: Option<Vec<f64>> = None;
                    for x in 0..self.nx {
                        let mass: f64 = (0..n_out).map(|o| cell(x, x1, x2, obs, o)).sum();
                        if mass <= ZERO_PROB {
                            continue;
                        }
                        let cond: Vec<f64> =
                            (0..n_out).map(|o| cell(x, x1, x2, obs, o) / mass).collect();
                        match &reference {
                            None => reference = Some(cond),
                            Some(r) => {
                                let tv: f64 = r.iter().zip(&cond).map(|(a, b)| (a - b).abs()).sum();
                                if 0.5 * tv > MARKOV_TOL {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}
