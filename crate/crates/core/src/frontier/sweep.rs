use rayon::prelude::*;

use super::pareto::pareto_filter;
use super::{
    ChannelParams, Frontier, FrontierError, FrontierPoint, NcPolicy, RelayPower, Scheme,
    SweepConfig,
};
use crate::gaussian::{
    prop1_min_nc, prop1_rates, prop2_min_nc, prop2_rates, prop3_min_nc, prop3_rates, prop4_min_nc,
    prop4_rates, prop5_min_ncs, prop5_rates, EquivocationPair, GaussianError, SchemeParams,
};

/// Free parameters of one grid point. Unused entries are ignored by the
/// scheme (`beta2` is only read by the two-sided scheme).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub alpha: f64,
    pub beta: f64,
    pub beta2: f64,
    pub gamma: f64,
}

fn infeasible_as_none<T>(r: Result<T, GaussianError>) -> Result<Option<T>, FrontierError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(GaussianError::Infeasible(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn check_match(scheme: Scheme, params: &ChannelParams) -> Result<(), FrontierError> {
    let two = matches!(params, ChannelParams::TwoSided(_));
    if scheme.is_two_sided() != two {
        return Err(FrontierError::Mismatch(format!(
            "{scheme} needs {} channel parameters",
            if scheme.is_two_sided() {
                "two-sided"
            } else {
                "single-sided"
            }
        )));
    }
    Ok(())
}

/// Rates at one grid point, or `None` when no feasible compression noise
/// exists under the policy.
pub fn evaluate(
    scheme: Scheme,
    policy: NcPolicy,
    params: &ChannelParams,
    g: GridPoint,
) -> Result<Option<(SchemeParams, EquivocationPair)>, FrontierError> {
    check_match(scheme, params)?;
    let GridPoint {
        alpha,
        beta,
        beta2,
        gamma,
    } = g;
    let out = match params {
        ChannelParams::OneSided(p) => {
            let nc = match (policy, scheme) {
                (NcPolicy::Explicit(nc), _) => Some(nc),
                (NcPolicy::Min, Scheme::Prop1) => infeasible_as_none(prop1_min_nc(alpha, p))?,
                (NcPolicy::Min, Scheme::Prop2) => prop2_min_nc(alpha, gamma, p)?.nc_min,
                (NcPolicy::Min, Scheme::Prop3) => infeasible_as_none(prop3_min_nc(alpha, beta, p))?,
                (NcPolicy::Min, _) => prop4_min_nc(alpha, beta, gamma, p)?.nc_min,
            };
            let Some(nc) = nc else { return Ok(None) };
            match scheme {
                Scheme::Prop1 => (
                    SchemeParams::Prop1 { alpha, nc },
                    prop1_rates(alpha, nc, p)?,
                ),
                Scheme::Prop2 => (
                    SchemeParams::Prop2 { alpha, gamma, nc },
                    prop2_rates(alpha, gamma, nc, p)?,
                ),
                Scheme::Prop3 => (
                    SchemeParams::Prop3 { alpha, beta, nc },
                    prop3_rates(alpha, beta, nc, p)?,
                ),
                _ => (
                    SchemeParams::Prop4 {
                        alpha,
                        beta,
                        gamma,
                        nc,
                    },
                    prop4_rates(alpha, beta, gamma, nc, p)?,
                ),
            }
        }
        ChannelParams::TwoSided(p) => {
            let (nc1, nc2) = match policy {
                NcPolicy::Explicit(nc) => (nc, nc),
                NcPolicy::Min => {
                    let (b1, b2) = prop5_min_ncs(alpha, beta, beta2, p)?;
                    match (b1.nc_min, b2.nc_min) {
                        (Some(a), Some(b)) => (a, b),
                        _ => return Ok(None),
                    }
                }
            };
            (
                SchemeParams::Prop5 {
                    alpha,
                    beta1: beta,
                    beta2,
                    nc1,
                    nc2,
                },
                prop5_rates(alpha, beta, beta2, nc1, nc2, p)?,
            )
        }
    };
    Ok(out.1.feasible.then_some(out))
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn grid(config: &SweepConfig) -> Vec<GridPoint> {
    let s = config.scheme;
    let alphas = linspace(0.0, 1.0, config.alpha_points);
    let betas = if s.has_beta() {
        linspace(0.0, 1.0, config.beta_points)
    } else {
        vec![1.0]
    };
    let betas2 = if s.is_two_sided() {
        betas.clone()
    } else {
        vec![1.0]
    };
    let gammas = if s.has_gamma() {
        linspace(
            config.gamma_range.0,
            config.gamma_range.1,
            config.gamma_points,
        )
    } else {
        vec![0.0]
    };
    let mut out = Vec::with_capacity(alphas.len() * betas.len() * betas2.len() * gammas.len());
    for &alpha in &alphas {
        for &beta in &betas {
            for &beta2 in &betas2 {
                for &gamma in &gammas {
                    out.push(GridPoint {
                        alpha,
                        beta,
                        beta2,
                        gamma,
                    });
                }
            }
        }
    }
    out
}

/// Evaluates the scheme on its parameter grid, in lexicographic order of
/// `(alpha, beta, beta2, gamma)`. Infeasible points are left out.
pub fn sweep(
    config: &SweepConfig,
    params: &ChannelParams,
) -> Result<Vec<(SchemeParams, EquivocationPair)>, FrontierError> {
    config.validate()?;
    check_match(config.scheme, params)?;
    let results: Vec<_> = grid(config)
        .into_par_iter()
        .map(|g| evaluate(config.scheme, config.nc, params, g))
        .collect();
    let mut out = Vec::with_capacity(results.len());
    for r in results {
        if let Some(v) = r? {
            out.push(v);
        }
    }
    Ok(out)
}

struct Coordinate {
    value: f64,
    lo: f64,
    hi: f64,
    step: f64,
}

fn grid_step(lo: f64, hi: f64, n: usize) -> f64 {
    (hi - lo) / (n.max(2) - 1) as f64
}

/// Coordinate ascent from a frontier point. A move is taken only when it
/// improves one rate without lowering the other; the step halves each pass.
pub fn refine_point(
    config: &SweepConfig,
    params: &ChannelParams,
    start: FrontierPoint,
) -> Result<FrontierPoint, FrontierError> {
    let s = config.scheme;
    let beta2 = match start.params {
        SchemeParams::Prop5 { beta2, .. } => beta2,
        _ => 1.0,
    };
    let mut coords = vec![Coordinate {
        value: start.params.alpha(),
        lo: 0.0,
        hi: 1.0,
        step: grid_step(0.0, 1.0, config.alpha_points),
    }];
    if s.has_beta() {
        coords.push(Coordinate {
            value: start.params.beta(),
            lo: 0.0,
            hi: 1.0,
            step: grid_step(0.0, 1.0, config.beta_points),
        });
    }
    if s.is_two_sided() {
        coords.push(Coordinate {
            value: beta2,
            lo: 0.0,
            hi: 1.0,
            step: grid_step(0.0, 1.0, config.beta_points),
        });
    }
    if s.has_gamma() {
        let (lo, hi) = config.gamma_range;
        coords.push(Coordinate {
            value: start.params.gamma(),
            lo,
            hi,
            step: grid_step(lo, hi, config.gamma_points),
        });
    }
    let point_of = |c: &[Coordinate]| {
        let mut it = c.iter().map(|k| k.value);
        let alpha = it.next().expect("alpha always present");
        let beta = if s.has_beta() {
            it.next().unwrap_or(1.0)
        } else {
            1.0
        };
        let beta2 = if s.is_two_sided() {
            it.next().unwrap_or(1.0)
        } else {
            1.0
        };
        let gamma = if s.has_gamma() {
            it.next().unwrap_or(0.0)
        } else {
            0.0
        };
        GridPoint {
            alpha,
            beta,
            beta2,
            gamma,
        }
    };

    let mut best = start;
    for _ in 0..config.refine_passes {
        for i in 0..coords.len() {
            for dir in [1.0, -1.0] {
                let old = coords[i].value;
                let cand = (old + dir * coords[i].step).clamp(coords[i].lo, coords[i].hi);
                if cand == old {
                    continue;
                }
                coords[i].value = cand;
                let improved = match evaluate(s, config.nc, params, point_of(&coords))? {
                    Some((sp, r))
                        if r.re1 >= best.re1
                            && r.re2 >= best.re2
                            && (r.re1 > best.re1 || r.re2 > best.re2) =>
                    {
                        best = FrontierPoint {
                            power: best.power,
                            params: sp,
                            re1: r.re1,
                            re2: r.re2,
                        };
                        true
                    }
                    _ => false,
                };
                if !improved {
                    coords[i].value = old;
                }
            }
        }
        for c in &mut coords {
            c.step *= 0.5;
        }
    }
    Ok(best)
}

/// Sweep, Pareto filter, refine every surviving point, filter again.
pub fn frontier(
    config: &SweepConfig,
    params: &ChannelParams,
) -> Result<Vec<FrontierPoint>, FrontierError> {
    let power = params.power();
    let raw: Vec<FrontierPoint> = sweep(config, params)?
        .into_iter()
        .map(|(sp, r)| FrontierPoint {
            power,
            params: sp,
            re1: r.re1,
            re2: r.re2,
        })
        .collect();
    let coarse = pareto_filter(raw);
    let refined = coarse
        .into_par_iter()
        .map(|p| refine_point(config, params, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(pareto_filter(refined))
}

/// One frontier per relay power, in the order given.
pub fn trace_family(
    config: &SweepConfig,
    params: &ChannelParams,
    powers: &[RelayPower],
) -> Result<Vec<Frontier>, FrontierError> {
    powers
        .iter()
        .map(|&power| {
            let p = params.with_power(power)?;
            Ok(Frontier {
                power,
                points: frontier(config, &p)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{GaussianCrbcParams, TwoSidedGaussianParams};

    fn fig3(a: f64) -> ChannelParams {
        ChannelParams::OneSided(GaussianCrbcParams::new(8.0, a, 1.0, 2.0).unwrap())
    }

    #[test]
    fn three_point_alpha_grid() {
        let mut cfg = SweepConfig::new(Scheme::Prop1);
        cfg.alpha_points = 3;
        let pts = sweep(&cfg, &fig3(100.0)).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0].0.alpha(), 0.0);
        assert_eq!(pts[1].0.alpha(), 0.5);
        assert!((pts[0].1.re2 - 0.2511).abs() < 5e-4, "{}", pts[0].1.re2);
        assert!((pts[2].1.re1 - 0.4240).abs() < 5e-4, "{}", pts[2].1.re1);
    }

    #[test]
    fn scheme_and_channel_must_agree() {
        let cfg = SweepConfig::new(Scheme::Prop5);
        assert!(matches!(
            sweep(&cfg, &fig3(1.0)),
            Err(FrontierError::Mismatch(_))
        ));
        let two =
            ChannelParams::TwoSided(TwoSidedGaussianParams::new(8.0, 1.0, 1.0, 1.0, 2.0).unwrap());
        assert!(sweep(&SweepConfig::new(Scheme::Prop1), &two).is_err());
        assert!(fig3(1.0).with_power(RelayPower::Pair(1.0, 1.0)).is_err());
    }

    #[test]
    fn config_validation() {
        let mut cfg = SweepConfig::new(Scheme::Prop2);
        cfg.gamma_points = 1;
        assert!(cfg.validate().is_err());
        let mut cfg = SweepConfig::new(Scheme::Prop1);
        cfg.gamma_points = 1;
        assert!(cfg.validate().is_ok());
        cfg.gamma_range = (1.0, f64::INFINITY);
        assert!(cfg.validate().is_err());
        assert_eq!("prop4".parse::<Scheme>().unwrap(), Scheme::Prop4);
        assert!("prop6".parse::<Scheme>().is_err());
    }

    #[test]
    fn linspace_hits_endpoints() {
        let v = linspace(-2.0, 2.0, 81);
        assert_eq!(v[0], -2.0);
        assert_eq!(v[40], 0.0);
        assert_eq!(v[80], 2.0);
    }

    #[test]
    fn explicit_nc_drops_infeasible_points() {
        let mut cfg = SweepConfig::new(Scheme::Prop1);
        cfg.alpha_points = 11;
        cfg.nc = NcPolicy::Explicit(0.035);
        let pts = sweep(&cfg, &fig3(100.0)).unwrap();
        assert!(!pts.is_empty() && pts.len() < 11);
        assert!(pts.iter().all(|(_, r)| r.feasible));
    }
}
