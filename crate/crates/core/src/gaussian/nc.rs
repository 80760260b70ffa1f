/// Threshold below which the leading coefficient is treated as zero.
pub(crate) const DEGENERATE_THETA: f64 = 1e-12;

/// Compression-noise floor from a constraint of the form
/// `theta * nc^2 + eta * nc - omega >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticNcBound {
    pub theta: f64,
    pub eta: f64,
    pub omega: f64,
    /// Smallest feasible `nc`, or `None` when no `nc >= 0` satisfies the
    /// constraint.
    pub nc_min: Option<f64>,
}

impl QuadraticNcBound {
    pub fn solve(theta: f64, eta: f64, omega: f64) -> Self {
        let nc_min = if theta <= DEGENERATE_THETA {
            // linear fallback: eta * nc >= omega
            if eta > 0.0 {
                Some((omega / eta).max(0.0))
            } else if omega <= 0.0 {
                Some(0.0)
            } else {
                None
            }
        } else {
            let disc = eta * eta + 4.0 * theta * omega;
            if disc < 0.0 {
                // the quadratic never dips below zero
                Some(0.0)
            } else {
                let sq = disc.sqrt();
                // larger root, in the form that avoids cancellation
                let root = if eta >= 0.0 {
                    let den = eta + sq;
                    if den == 0.0 {
                        0.0
                    } else {
                        2.0 * omega / den
                    }
                } else {
                    (-eta + sq) / (2.0 * theta)
                };
                Some(root.max(0.0))
            }
        };
        Self {
            theta,
            eta,
            omega,
            nc_min,
        }
    }

    pub fn is_feasible(&self, nc: f64) -> bool {
        self.nc_min.is_some_and(|m| nc >= m)
    }

    /// Residual `theta * nc^2 + eta * nc - omega`.
    pub fn residual(&self, nc: f64) -> f64 {
        self.theta * nc * nc + self.eta * nc - self.omega
    }
}
