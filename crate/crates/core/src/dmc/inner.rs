//! Achievable-region bounds evaluated on an explicit input distribution.

use super::channel::DmcSpec;
use super::factors::{JamRelayFactors, RelayFactors, TwoSidedFactors};
use super::info::Joint;
use super::{DmcError, DEFAULT_CELL_CAP};

/// Constraint slack at or below this counts as satisfied.
const SLACK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub cell_cap: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            cell_cap: DEFAULT_CELL_CAP,
        }
    }
}

/// All rate and equivocation bounds for one input distribution, in bits.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionEvaluation {
    pub r1: f64,
    pub r2: f64,
    pub r_sum: f64,
    /// Equivocation brackets before the positivity clamp.
    pub re1_bound: f64,
    pub re2_bound: f64,
    /// `min(R_i, max(0, bracket))`.
    pub re1: f64,
    pub re2: f64,
    /// Left minus right side of each compression constraint.
    pub slacks: Vec<f64>,
    pub constraints_satisfied: bool,
}

impl RegionEvaluation {
    fn assemble(
        r1: f64,
        r2: f64,
        binning: f64,
        re1_bound: f64,
        re2_bound: f64,
        slacks: Vec<f64>,
    ) -> Self {
        Self {
            r1,
            r2,
            r_sum: r1 + r2 - binning,
            re1_bound,
            re2_bound,
            re1: r1.min(re1_bound.max(0.0)),
            re2: r2.min(re2_bound.max(0.0)),
            constraints_satisfied: slacks.iter().all(|&s| s <= SLACK_TOL),
            slacks,
        }
    }
}

fn require_one_sided(dmc: &DmcSpec) -> Result<(), DmcError> {
    if dmc.is_two_sided() {
        return Err(DmcError::Shape(
            "one-sided schemes need a channel without X2".into(),
        ));
    }
    Ok(())
}

pub fn eval_theorem1(dmc: &DmcSpec, f: &RelayFactors) -> Result<RegionEvaluation, DmcError> {
    eval_theorem1_with(dmc, f, &EvalConfig::default())
}

/// Relaying without jamming. Joint axes `(V1, V2, X, X1, Y1, Yhat, Y2)`.
pub fn eval_theorem1_with(
    dmc: &DmcSpec,
    f: &RelayFactors,
    cfg: &EvalConfig,
) -> Result<RegionEvaluation, DmcError> {
    require_one_sided(dmc)?;
    f.validate(dmc)?;
    let dims = vec![
        f.nv1(),
        f.nv2(),
        dmc.nx(),
        dmc.nx1(),
        dmc.ny1(),
        f.nyhat(),
        dmc.ny2(),
    ];
    let j = Joint::from_fn(dims, cfg.cell_cap, |i| {
        let (v1, v2, x, x1, y1, yh, y2) = (i[0], i[1], i[2], i[3], i[4], i[5], i[6]);
        f.pv1v2.get(&[v1, v2])
            * f.px_given_v.get(&[v1, v2, x])
            * f.px1.get(&[x1])
            * f.pyhat.get(&[x1, v1, y1, yh])
            * dmc.p(x, x1, 0, y1, y2)
    })?;
    const V1: usize = 0;
    const V2: usize = 1;
    const X1: usize = 3;
    const Y1: usize = 4;
    const YH: usize = 5;
    const Y2: usize = 6;

    let binning = j.mutual_info(&[V1], &[V2]);
    let r1 = j.cond_mutual_info(&[V1], &[Y1], &[X1]);
    let r2 = j.cond_mutual_info(&[V2], &[Y2, YH], &[X1]);
    let re1 = r1 - j.cond_mutual_info(&[V1], &[Y2, YH], &[V2, X1]) - binning;
    let re2 = r2 - j.cond_mutual_info(&[V2], &[Y1], &[V1, X1]) - binning;
    let slack = j.cond_mutual_info(&[YH], &[Y1], &[X1, V1]) - j.mutual_info(&[YH, X1], &[Y2]);
    Ok(RegionEvaluation::assemble(
        r1,
        r2,
        binning,
        re1,
        re2,
        vec![slack],
    ))
}

pub fn eval_theorem4(dmc: &DmcSpec, f: &JamRelayFactors) -> Result<RegionEvaluation, DmcError> {
    eval_theorem4_with(dmc, f, &EvalConfig::default())
}

/// Jamming plus relaying with help signal `U`. Joint axes
/// `(V1, V2, X, U, X1, Y1, Yhat, Y2)`.
pub fn eval_theorem4_with(
    dmc: &DmcSpec,
    f: &JamRelayFactors,
    cfg: &EvalConfig,
) -> Result<RegionEvaluation, DmcError> {
    require_one_sided(dmc)?;
    f.validate(dmc)?;
    let dims = vec![
        f.pv1v2.shape()[0],
        f.pv1v2.shape()[1],
        dmc.nx(),
        f.nu(),
        dmc.nx1(),
        dmc.ny1(),
        f.nyhat(),
        dmc.ny2(),
    ];
    let j = Joint::from_fn(dims, cfg.cell_cap, |i| {
        let (v1, v2, x, u, x1, y1, yh, y2) = (i[0], i[1], i[2], i[3], i[4], i[5], i[6], i[7]);
        f.pv1v2.get(&[v1, v2])
            * f.px_given_v.get(&[v1, v2, x])
            * f.pu.get(&[u])
            * f.px1_given_u.get(&[u, x1])
            * f.pyhat.get(&[u, v1, y1, yh])
            * dmc.p(x, x1, 0, y1, y2)
    })?;
    const V1: usize = 0;
    const V2: usize = 1;
    const U: usize = 3;
    const X1: usize = 4;
    const Y1: usize = 5;
    const YH: usize = 6;
    const Y2: usize = 7;

    let binning = j.mutual_info(&[V1], &[V2]);
    let r1 = j.cond_mutual_info(&[V1], &[Y1], &[X1]);
    let r2 = j.cond_mutual_info(&[V2], &[Y2, YH], &[U]);
    let re1 = r1 - j.cond_mutual_info(&[V1], &[Y2, YH], &[V2, U]) - binning;
    let re2 = r2 - j.cond_mutual_info(&[V2], &[Y1], &[V1, X1]) - binning;
    let slack = j.cond_mutual_info(&[YH], &[Y1], &[X1, V1, U]) - j.mutual_info(&[YH, U], &[Y2]);
    Ok(RegionEvaluation::assemble(
        r1,
        r2,
        binning,
        re1,
        re2,
        vec![slack],
    ))
}

pub fn eval_theorem5(dmc: &DmcSpec, f: &TwoSidedFactors) -> Result<RegionEvaluation, DmcError> {
    eval_theorem5_with(dmc, f, &EvalConfig::default())
}

/// Two-sided cooperation. Joint axes
/// `(V1, V2, X, U1, X1, U2, X2, Y1, Y2, Yhat1, Yhat2)`.
pub fn eval_theorem5_with(
    dmc: &DmcSpec,
    f: &TwoSidedFactors,
    cfg: &EvalConfig,
) -> Result<RegionEvaluation, DmcError> {
    if !dmc.is_two_sided() {
        return Err(DmcError::Shape(
            "two-sided scheme needs a channel with X2".into(),
        ));
    }
    f.validate(dmc)?;
    let dims = vec![
        f.pv1v2.shape()[0],
        f.pv1v2.shape()[1],
        dmc.nx(),
        f.pu1x1.shape()[0],
        dmc.nx1(),
        f.pu2x2.shape()[0],
        dmc.nx2(),
        dmc.ny1(),
        dmc.ny2(),
        f.pyhat1.shape()[2],
        f.pyhat2.shape()[2],
    ];
    let j = Joint::from_fn(dims, cfg.cell_cap, |i| {
        let (v1, v2, x, u1, x1, u2, x2) = (i[0], i[1], i[2], i[3], i[4], i[5], i[6]);
        let (y1, y2, yh1, yh2) = (i[7], i[8], i[9], i[10]);
        f.pv1v2.get(&[v1, v2])
            * f.px_given_v.get(&[v1, v2, x])
            * f.pu1x1.get(&[u1, x1])
            * f.pyhat1.get(&[u1, y1, yh1])
            * f.pu2x2.get(&[u2, x2])
            * f.pyhat2.get(&[u2, y2, yh2])
            * dmc.p(x, x1, x2, y1, y2)
    })?;
    const V1: usize = 0;
    const V2: usize = 1;
    const U1: usize = 3;
    const X1: usize = 4;
    const U2: usize = 5;
    const X2: usize = 6;
    const Y1: usize = 7;
    const Y2: usize = 8;
    const YH1: usize = 9;
    const YH2: usize = 10;

    let binning = j.mutual_info(&[V1], &[V2]);
    let r1 = j.cond_mutual_info(&[V1], &[Y1, YH2], &[X1, U2]);
    let r2 = j.cond_mutual_info(&[V2], &[Y2, YH1], &[X2, U1]);
    let re1 = r1 - j.cond_mutual_info(&[V1], &[Y2, YH1], &[V2, X2, U1]) - binning;
    let re2 = r2 - j.cond_mutual_info(&[V2], &[Y1, YH2], &[V1, X1, U2]) - binning;
    let slack1 = j.cond_mutual_info(&[YH1], &[Y1], &[U1, X1, U2])
        - j.cond_mutual_info(&[YH1, U1], &[Y2], &[X2]);
    let slack2 = j.cond_mutual_info(&[YH2], &[Y2], &[U2, X2, U1])
        - j.cond_mutual_info(&[YH2, U2], &[Y1], &[X1]);
    Ok(RegionEvaluation::assemble(
        r1,
        r2,
        binning,
        re1,
        re2,
        vec![slack1, slack2],
    ))
}

#[cfg(test)]
mod tests {
    use super::super::factors::Table;
    use super::*;

    fn point(n: usize) -> Table {
        let mut t = Table::zeros(vec![n]).unwrap();
        t.data_mut()[0] = 1.0;
        t
    }

    fn bsc_pair() -> DmcSpec {
        DmcSpec::from_fn(2, 2, 2, 2, |x, x1, y1, y2| {
            let a = if x == y1 { 0.9 } else { 0.1 };
            let b = if (x ^ x1) == y2 { 0.75 } else { 0.25 };
            a * b
        })
        .unwrap()
    }

    #[test]
    fn singleton_auxiliaries_give_zero() {
        let dmc = bsc_pair();
        let f = RelayFactors {
            pv1v2: Table::new(vec![1, 1], vec![1.0]).unwrap(),
            px_given_v: Table::new(vec![1, 1, 2], vec![0.5, 0.5]).unwrap(),
            px1: point(2),
            pyhat: Table::new(vec![2, 1, 2, 1], vec![1.0; 4]).unwrap(),
        };
        let r = eval_theorem1(&dmc, &f).unwrap();
        assert_eq!((r.r1, r.r2, r.re1, r.re2), (0.0, 0.0, 0.0, 0.0));
        assert!(r.constraints_satisfied);
    }

    #[test]
    fn rejects_mismatched_factors() {
        let dmc = bsc_pair();
        let f = RelayFactors {
            pv1v2: Table::new(vec![1, 1], vec![1.0]).unwrap(),
            px_given_v: Table::new(vec![1, 1, 3], vec![0.5, 0.5, 0.0]).unwrap(),
            px1: point(2),
            pyhat: Table::new(vec![2, 1, 2, 1], vec![1.0; 4]).unwrap(),
        };
        assert!(matches!(eval_theorem1(&dmc, &f), Err(DmcError::Shape(_))));
    }

    #[test]
    fn cell_cap_is_enforced() {
        let dmc = bsc_pair();
        let f = RelayFactors {
            pv1v2: Table::new(vec![1, 1], vec![1.0]).unwrap(),
            px_given_v: Table::new(vec![1, 1, 2], vec![0.5, 0.5]).unwrap(),
            px1: point(2),
            pyhat: Table::new(vec![2, 1, 2, 1], vec![1.0; 4]).unwrap(),
        };
        let cfg = EvalConfig { cell_cap: 8 };
        assert!(matches!(
            eval_theorem1_with(&dmc, &f, &cfg),
            Err(DmcError::TooLarge { cap: 8 })
        ));
    }
}
