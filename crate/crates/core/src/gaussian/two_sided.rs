//! Two-sided jam + relay scheme: each user splits its relay power into a
//! help signal (`beta_i a_i P`) and jamming noise (`(1 - beta_i) a_i P`) and
//! forwards a compressed copy of its own observation.
//!
//! The closed forms are evaluated as given. Two terms look like
//! misprints (a doubled `N2` in the `re2` signal term and an `alpha P` where
//! symmetry suggests `(1 - alpha) P`); they are kept verbatim.

use super::nc::QuadraticNcBound;
use super::{
    check_nc, check_unit, half_log2_1p, EquivocationPair, GaussianError, RateBounds,
    TwoSidedGaussianParams,
};

/// Compression-noise floors `(nc1_min, nc2_min)` as two quadratic bounds.
pub fn prop5_min_ncs(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    params: &TwoSidedGaussianParams,
) -> Result<(QuadraticNcBound, QuadraticNcBound), GaussianError> {
    check_unit("alpha", alpha)?;
    check_unit("beta1", beta1)?;
    check_unit("beta2", beta2)?;
    let (p, a1, a2, n1, n2) = (
        params.p(),
        params.a1(),
        params.a2(),
        params.n1(),
        params.n2(),
    );
    let jam1 = a1 * (1.0 - beta1) * p;
    let jam2 = a2 * (1.0 - beta2) * p;
    let cross = (p + n1 + jam2) * (p + n2 + jam1);

    let a11 = a1 * beta1 * p;
    let b11 = p * (p + a1 * beta1 * (p + n1)) - cross;
    let c11 = (p + n1 + jam2) * (p * n1 + (p + n1) * (n2 + jam1));

    let a22 = a2 * beta2 * p;
    let b22 = p * (p + a2 * beta2 * (p + n2)) - cross;
    let c22 = (p + n2 + jam1) * (p * n2 + (p + n2) * (n1 + jam2));

    Ok((
        QuadraticNcBound::solve(a11, b11, c11),
        QuadraticNcBound::solve(a22, b22, c22),
    ))
}

pub fn prop5_bounds(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    nc1: f64,
    nc2: f64,
    params: &TwoSidedGaussianParams,
) -> Result<RateBounds, GaussianError> {
    check_unit("alpha", alpha)?;
    check_unit("beta1", beta1)?;
    check_unit("beta2", beta2)?;
    check_nc("nc1", nc1)?;
    check_nc("nc2", nc2)?;
    let (p, a1, a2, n1, n2) = (
        params.p(),
        params.a1(),
        params.a2(),
        params.n1(),
        params.n2(),
    );
    let alpha_bar = 1.0 - alpha;
    let jam1 = a1 * (1.0 - beta1) * p;
    let jam2 = a2 * (1.0 - beta2) * p;

    let s1 = n1 + jam2 + n2 + nc2;
    let re1 = half_log2_1p(alpha * p * s1 / (alpha_bar * p * s1 + (n1 + jam2) * (n2 + nc2)))
        - half_log2_1p(alpha * p * (1.0 / (jam1 + n2) + 1.0 / (n1 + nc1)));

    let num2 = alpha_bar * p * (n2 + jam1 + n2 + nc1);
    let den2 = alpha * p * (n2 + jam1 + n1 + nc1) + (n2 + jam1) * (n1 + nc1);
    let re2 = half_log2_1p(num2 / den2)
        - half_log2_1p(alpha * p * (1.0 / (jam2 + n1) + 1.0 / (n2 + nc2)));

    Ok(RateBounds { re1, re2 })
}

pub fn prop5_rates(
    alpha: f64,
    beta1: f64,
    beta2: f64,
    nc1: f64,
    nc2: f64,
    params: &TwoSidedGaussianParams,
) -> Result<EquivocationPair, GaussianError> {
    let bounds = prop5_bounds(alpha, beta1, beta2, nc1, nc2, params)?;
    let (b1, b2) = prop5_min_ncs(alpha, beta1, beta2, params)?;
    Ok(bounds.clamp(b1.is_feasible(nc1) && b2.is_feasible(nc2)))
}
