//! Numeric acceptance suite.
//!
//! Every criterion is deterministic (fixed RNG seeds) and reports a one-line
//! outcome. The anchor channel (`P = 8, a = 100, N1 = 1, N2 = 2`) can be
//! overridden so that a perturbed run demonstrably fails.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dmc::sample::{self, AuxSizes};
use crate::dmc::{
    eval_theorem1, eval_theorem3, eval_theorem4, maximize_theorem3, maximize_theorem3_seeded,
    RelayFactors, Table,
};
use crate::frontier::{frontier, trace_family, ChannelParams, RelayPower, Scheme, SweepConfig};
use crate::gaussian::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnchorChannel {
    pub p: f64,
    pub a: f64,
    pub n1: f64,
    pub n2: f64,
}

impl Default for AnchorChannel {
    fn default() -> Self {
        Self {
            p: 8.0,
            a: 100.0,
            n1: 1.0,
            n2: 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AcceptanceConfig {
    pub anchor: AnchorChannel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub tags: &'static [&'static str],
}

impl Criterion {
    /// Matches a tag, the numeric id, or the name.
    pub fn matches(&self, filter: &str) -> bool {
        self.tags.contains(&filter) || self.id.to_string() == filter || self.name == filter
    }
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        name: "wiretap-anchor",
        tags: &["gaussian", "anchor"],
    },
    Criterion {
        id: 2,
        name: "pure-relay-anchor",
        tags: &["gaussian", "anchor"],
    },
    Criterion {
        id: 3,
        name: "full-jamming-anchor",
        tags: &["gaussian", "anchor"],
    },
    Criterion {
        id: 4,
        name: "limit-identity",
        tags: &["gaussian", "anchor"],
    },
    Criterion {
        id: 5,
        name: "convergence",
        tags: &["gaussian", "frontier"],
    },
    Criterion {
        id: 6,
        name: "reductions",
        tags: &["gaussian", "dmc"],
    },
    Criterion {
        id: 7,
        name: "nc-monotonicity",
        tags: &["gaussian"],
    },
    Criterion {
        id: 8,
        name: "degraded-no-secrecy",
        tags: &["dmc"],
    },
    Criterion {
        id: 9,
        name: "reverse-degraded-capacity",
        tags: &["dmc"],
    },
    Criterion {
        id: 10,
        name: "outer-bound-dominance",
        tags: &["gaussian", "dmc", "frontier"],
    },
    Criterion {
        id: 11,
        name: "jamming-threshold",
        tags: &["gaussian"],
    },
];

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub criterion: Criterion,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {:<26} {:>9.3} ms  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion.id,
            self.criterion.name,
            self.elapsed.as_secs_f64() * 1e3,
            self.detail
        )
    }
}

type Check = Result<(bool, String), String>;
type Curve<'a> = Box<dyn Fn(f64) -> Result<RateBounds, GaussianError> + 'a>;

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn anchor_params(c: &AnchorChannel) -> Result<GaussianCrbcParams, String> {
    GaussianCrbcParams::new(c.p, c.a, c.n1, c.n2).map_err(err)
}

fn within_budget(
    pass: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
) -> (bool, String) {
    if elapsed > budget {
        (false, format!("{detail}; over time budget {budget:?}"))
    } else {
        (pass, detail)
    }
}

fn wiretap_anchor(c: &AnchorChannel) -> Check {
    let v = wiretap_secrecy(c.p, c.n1, c.n2).map_err(err)?;
    Ok((
        (v - 0.424).abs() <= 0.005,
        format!("re1 = {v:.6}, want 0.424 +- 0.005"),
    ))
}

fn pure_relay_anchor(c: &AnchorChannel) -> Check {
    let g = anchor_params(c)?;
    let nc = prop1_min_nc(0.0, &g).map_err(err)?;
    let v = prop1_rates(0.0, nc, &g).map_err(err)?.re2;
    Ok((
        (v - 0.251).abs() <= 0.005,
        format!("re2 = {v:.6}, want 0.251 +- 0.005"),
    ))
}

fn full_jamming_anchor(c: &AnchorChannel) -> Check {
    let g = anchor_params(c)?;
    // re1 does not depend on nc; no nc is feasible without a help signal
    let v = positive_part(prop3_bounds(1.0, 0.0, 0.0, &g).map_err(err)?.re1);
    Ok((
        (v - 1.578).abs() <= 0.01,
        format!("re1 = {v:.6}, want 1.578 +- 0.01"),
    ))
}

fn positive_part(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        0.0
    }
}

fn limit_identity(c: &AnchorChannel) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = 10f64.powf(rng.gen_range(-3.0..3.0));
        let n1 = 10f64.powf(rng.gen_range(-2.0..2.0));
        let n2 = 10f64.powf(rng.gen_range(-2.0..2.0));
        let a = corollary1_limit(p, n1, n2).map_err(err)?;
        let b = gaussian_sato_bound(p, n1, n2).map_err(err)?;
        worst = worst.max((a - b).abs() / b.abs().max(f64::MIN_POSITIVE));
    }
    let v = corollary1_limit(c.p, c.n1, c.n2).map_err(err)?;
    let pass = worst <= 1e-12 && (v - 0.26526).abs() <= 1e-4;
    Ok((
        pass,
        format!("max rel diff {worst:.1e}; limit = {v:.6}, want 0.26526 +- 1e-4"),
    ))
}

fn convergence(c: &AnchorChannel) -> Check {
    let g = anchor_params(c)?.with_a(1e6).map_err(err)?;
    let points = frontier(
        &SweepConfig::new(Scheme::Prop1),
        &ChannelParams::OneSided(g),
    )
    .map_err(err)?;
    let best = points.iter().map(|p| p.re2).fold(0.0, f64::max);
    let limit = corollary1_limit(c.p, c.n1, c.n2).map_err(err)?;
    let gap = limit - best;
    Ok((
        (0.0..=0.002).contains(&gap),
        format!("max re2 = {best:.6}, limit = {limit:.6}, gap {gap:.2e}"),
    ))
}

fn random_channel(rng: &mut ChaCha8Rng) -> Result<GaussianCrbcParams, String> {
    GaussianCrbcParams::new(
        rng.gen_range(0.5..20.0),
        10f64.powf(rng.gen_range(-2.0..3.0)),
        rng.gen_range(0.1..10.0),
        rng.gen_range(0.1..10.0),
    )
    .map_err(err)
}

fn reductions() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = Vec::new();
    for i in 0..1000 {
        let g = random_channel(&mut rng)?;
        let alpha = rng.gen_range(0.0..=1.0);
        let beta = rng.gen_range(0.0..=1.0);
        let gamma = rng.gen_range(-2.0..2.0);
        let nc = rng.gen_range(0.0..10.0);
        let pairs = [
            (
                "prop2(gamma=0) vs prop1",
                prop2_bounds(alpha, 0.0, nc, &g),
                prop1_bounds(alpha, nc, &g),
            ),
            (
                "prop4(beta=1) vs prop2",
                prop4_bounds(alpha, 1.0, gamma, nc, &g),
                prop2_bounds(alpha, gamma, nc, &g),
            ),
            (
                "prop4(gamma=0) vs prop3",
                prop4_bounds(alpha, beta, 0.0, nc, &g),
                prop3_bounds(alpha, beta, nc, &g),
            ),
        ];
        for (name, x, y) in pairs {
            let (x, y) = (x.map_err(err)?, y.map_err(err)?);
            if !(rel_close(x.re1, y.re1, 1e-12) && rel_close(x.re2, y.re2, 1e-12)) {
                failures.push(format!("{name} at draw {i}"));
            }
        }

        let nx1 = rng.gen_range(1..=3);
        let dmc = sample::channel(&mut rng, 2, nx1, 2, 2);
        let f = sample::relay_factors(&mut rng, &dmc, AuxSizes::default());
        let a = eval_theorem1(&dmc, &f).map_err(err)?;
        let b = eval_theorem4(&dmc, &f.with_helper_equal_to_relay_input().map_err(err)?)
            .map_err(err)?;
        let same = [
            (a.r1, b.r1),
            (a.r2, b.r2),
            (a.r_sum, b.r_sum),
            (a.re1_bound, b.re1_bound),
            (a.re2_bound, b.re2_bound),
        ]
        .into_iter()
        .chain(a.slacks.iter().copied().zip(b.slacks.iter().copied()))
        .all(|(x, y)| rel_close(x, y, 1e-12));
        if !same {
            failures.push(format!("theorem4(U=X1) vs theorem1 at draw {i}"));
        }
    }
    Ok(summarize(
        failures,
        "4 reductions x 1000 draws agree to 1e-12",
    ))
}

fn summarize(failures: Vec<String>, ok: &str) -> (bool, String) {
    match failures.first() {
        None => (true, ok.to_string()),
        Some(first) => (
            false,
            format!("{} failures, first: {first}", failures.len()),
        ),
    }
}

fn nc_monotonicity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = Vec::new();
    for i in 0..100 {
        let g = random_channel(&mut rng)?;
        // alpha = 1 leaves user 2 no power and re2 is flat
        let alpha = rng.gen_range(0.0..0.99);
        let beta = rng.gen_range(0.0..=1.0);
        let gamma = rng.gen_range(-2.0..2.0);
        let grid: Vec<f64> = (0..50).map(|k| 0.01 + 0.2 * k as f64).collect();
        let curves: [(&str, Curve); 4] = [
            ("prop1", Box::new(|nc| prop1_bounds(alpha, nc, &g))),
            ("prop2", Box::new(|nc| prop2_bounds(alpha, gamma, nc, &g))),
            ("prop3", Box::new(|nc| prop3_bounds(alpha, beta, nc, &g))),
            (
                "prop4",
                Box::new(|nc| prop4_bounds(alpha, beta, gamma, nc, &g)),
            ),
        ];
        for (name, curve) in curves {
            let values = grid
                .iter()
                .map(|&nc| curve(nc).map(|b| b.re2))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            if !values.windows(2).all(|w| w[1] < w[0]) {
                failures.push(format!("{name} at draw {i}"));
            }
        }
    }
    Ok(summarize(
        failures,
        "re2 strictly decreasing on 400 curves of 50 points",
    ))
}

fn degraded_no_secrecy() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_outer = f64::NEG_INFINITY;
    let mut worst_inner = f64::NEG_INFINITY;
    for _ in 0..50 {
        let dmc = sample::degraded_channel(&mut rng, 2, 2, 2, 2);
        if !dmc.is_degraded() {
            return Ok((false, "sampled channel is not degraded".into()));
        }
        worst_outer = worst_outer.max(maximize_theorem3(&dmc, 16).map_err(err)?.value);
        for _ in 0..10 {
            let f = sample::relay_factors(
                &mut rng,
                &dmc,
                AuxSizes {
                    v1: 2,
                    v2: 3,
                    u: 1,
                    yhat: 2,
                },
            );
            worst_inner = worst_inner.max(eval_theorem1(&dmc, &f).map_err(err)?.re2_bound);
        }
    }
    Ok((
        worst_outer <= 1e-9 && worst_inner <= 1e-9,
        format!("max outer {worst_outer:.1e}, max unclamped inner {worst_inner:.1e}"),
    ))
}

fn product_input(px: &[f64], px1: &[f64]) -> Result<Table, String> {
    let data = px
        .iter()
        .flat_map(|&a| px1.iter().map(move |&b| a * b))
        .collect();
    Table::new(vec![px.len(), px1.len()], data).map_err(err)
}

fn reverse_degraded_capacity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let dmc = sample::reverse_degraded_channel(&mut rng, 2, 2, 2, 3);
        if !dmc.is_reverse_degraded() {
            return Ok((false, "sampled channel is not reverse-degraded".into()));
        }
        let px = sample::simplex(&mut rng, 2);
        let px1 = sample::simplex(&mut rng, 2);
        let f = RelayFactors {
            pv1v2: Table::new(vec![1, 2], px.clone()).map_err(err)?,
            px_given_v: Table::new(vec![1, 2, 2], vec![1.0, 0.0, 0.0, 1.0]).map_err(err)?,
            px1: Table::new(vec![2], px1.clone()).map_err(err)?,
            pyhat: Table::new(vec![2, 1, 2, 1], vec![1.0; 4]).map_err(err)?,
        };
        let inner = eval_theorem1(&dmc, &f).map_err(err)?.re2_bound;
        let outer = eval_theorem3(&dmc, &product_input(&px, &px1)?).map_err(err)?;
        worst = worst.max((inner - outer).abs());
    }
    Ok((worst <= 1e-9, format!("max |inner - outer| = {worst:.1e}")))
}

fn outer_bound_dominance(c: &AnchorChannel) -> Check {
    let g = anchor_params(c)?;
    let sato = gaussian_sato_bound(c.p, c.n1, c.n2).map_err(err)?;
    let powers: Vec<RelayPower> = [1.0, 10.0, 100.0, 1000.0]
        .into_iter()
        .map(RelayPower::Single)
        .collect();
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for scheme in [Scheme::Prop1, Scheme::Prop2] {
        let families = trace_family(
            &SweepConfig::new(scheme),
            &ChannelParams::OneSided(g),
            &powers,
        )
        .map_err(err)?;
        for p in families.iter().flat_map(|f| &f.points) {
            worst = worst.max(p.re2 - sato);
            count += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut dmc_worst = f64::NEG_INFINITY;
    for _ in 0..30 {
        let dmc = sample::channel(&mut rng, 2, 2, 2, 2);
        let f = sample::relay_factors(&mut rng, &dmc, AuxSizes::default());
        let achievable = eval_theorem1(&dmc, &f).map_err(err)?.re2;
        let mut px = vec![0.0; 2];
        for (k, w) in f.pv1v2.data().iter().enumerate() {
            for (x, slot) in px.iter_mut().enumerate() {
                *slot += w * f.px_given_v.data()[k * 2 + x];
            }
        }
        let seed = product_input(&px, f.px1.data())?;
        let outer = maximize_theorem3_seeded(&dmc, 8, &[seed])
            .map_err(err)?
            .value;
        dmc_worst = dmc_worst.max(achievable - outer);
    }
    Ok((
        count > 0 && worst <= 1e-9 && dmc_worst <= 1e-12,
        format!(
            "{count} frontier points, max re2 - sato = {worst:.2e}; dmc max excess {dmc_worst:.1e}"
        ),
    ))
}

fn jamming_threshold_check() -> Check {
    let (p, n1, n2) = (8.0, 2.0, 1.0);
    let threshold = jamming_threshold(p, n1, n2).map_err(err)?;
    let step = 1e-3;
    let mut failures = Vec::new();
    for k in -5i32..=5 {
        let a = threshold + k as f64 * step;
        let g = GaussianCrbcParams::new(p, a, n1, n2).map_err(err)?;
        let re1 = positive_part(prop3_bounds(1.0, 0.0, 0.0, &g).map_err(err)?.re1);
        if (re1 > 0.0) != (a > threshold) {
            failures.push(format!("a = {a}: re1 = {re1:e}"));
        }
    }
    let (pass, detail) = summarize(failures, "");
    Ok((
        pass,
        format!("threshold {threshold}, 11 points at step {step}{detail}"),
    ))
}

fn run_one(c: Criterion, config: &AcceptanceConfig) -> Outcome {
    let anchor = &config.anchor;
    let start = Instant::now();
    let result = match c.id {
        1 => wiretap_anchor(anchor),
        2 => pure_relay_anchor(anchor),
        3 => full_jamming_anchor(anchor),
        4 => limit_identity(anchor),
        5 => convergence(anchor),
        6 => reductions(),
        7 => nc_monotonicity(),
        8 => degraded_no_secrecy(),
        9 => reverse_degraded_capacity(),
        10 => outer_bound_dominance(anchor),
        _ => jamming_threshold_check(),
    };
    let elapsed = start.elapsed();
    let budget = match c.id {
        1..=3 => Some(Duration::from_millis(1)),
        5 => Some(Duration::from_secs(5)),
        6 => Some(Duration::from_secs(10)),
        _ => None,
    };
    let (passed, detail) = match result {
        Ok((pass, detail)) => match budget {
            Some(b) => within_budget(pass, detail, elapsed, b),
            None => (pass, detail),
        },
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome {
        criterion: c,
        passed,
        detail,
        elapsed,
    }
}

/// Runs the criteria selected by `filter` (all when `None`), in order.
pub fn run(config: &AcceptanceConfig, filter: Option<&str>) -> Vec<Outcome> {
    CRITERIA
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.matches(f)))
        .map(|c| run_one(c, config))
        .collect()
}
