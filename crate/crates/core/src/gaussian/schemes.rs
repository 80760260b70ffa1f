//! Single-sided schemes.
//!
//! In every scheme the transmitter splits its power as `alpha P` for user 1
//! and `(1 - alpha) P` for user 2, and user 1 forwards a compressed version of
//! `Y1` (with user 1's own codeword removed) at compression noise `nc`.
//! The jamming variants spend `beta a P` of the relay power on the help
//! signal and `(1 - beta) a P` on Gaussian jamming noise aimed at user 2.

use super::nc::QuadraticNcBound;
use super::{
    check_finite, check_nc, check_unit, half_log2_1p, snr, EquivocationPair, GaussianCrbcParams,
    GaussianError, RateBounds,
};

/// Mutual information between the two DPC auxiliaries, `1/2 log2(1 + g^2 ab/a)`.
fn dpc_binning_loss(alpha: f64, gamma: f64) -> f64 {
    let alpha_bar = 1.0 - alpha;
    half_log2_1p(snr(gamma * gamma * alpha_bar, alpha))
}

/// Variance of the DPC auxiliary `V1 = U1 + gamma U2`, in units of `P`.
fn dpc_share(alpha: f64, gamma: f64) -> f64 {
    alpha + gamma * gamma * (1.0 - alpha)
}

/// Information user 1 gets about user 2's signal once its own auxiliary is
/// known, as an SNR. `alpha = gamma = 0` is the limit along `gamma = 0`.
fn dpc_leak_snr(alpha: f64, gamma: f64, p: f64, n1: f64) -> f64 {
    let alpha_bar = 1.0 - alpha;
    let g1 = gamma - 1.0;
    let share = dpc_share(alpha, gamma);
    if share == 0.0 {
        alpha_bar * g1 * g1 * p / n1
    } else {
        alpha * alpha_bar * g1 * g1 * p / (share * n1)
    }
}

fn dpc_re1_signal(alpha: f64, gamma: f64, p: f64, n1: f64) -> f64 {
    let alpha_bar = 1.0 - alpha;
    let g1 = gamma - 1.0;
    let lead = alpha_bar * gamma + alpha;
    snr(
        lead * lead * p,
        dpc_share(alpha, gamma) * n1 + g1 * g1 * alpha * alpha_bar * p,
    )
}

/// Shared DPC quadratic. `eve` is the total interference-plus-noise power at
/// user 2 apart from the transmitter signal, `help` the help-signal ratio
/// (`a` or `a beta`).
fn dpc_quadratic(alpha: f64, gamma: f64, help: f64, eve: f64, p: f64, n1: f64) -> QuadraticNcBound {
    let alpha_bar = 1.0 - alpha;
    let g1 = 1.0 - gamma;
    let mut share = dpc_share(alpha, gamma);
    let mut mix = alpha;
    if share == 0.0 {
        // alpha = gamma = 0: every coefficient carries a common factor alpha
        // along gamma = 0; divide it out.
        share = 1.0;
        mix = 1.0;
    }
    let k = n1 * share + mix * alpha_bar * g1 * g1 * p;
    let theta = help * share * p;
    let eta =
        share * p * (help * n1 + g1 * g1 * alpha_bar * p * (help + alpha_bar)) - (p + eve) * k;
    let omega =
        ((p + eve) * (g1 * g1 * alpha_bar * p + n1) - g1 * g1 * alpha_bar * alpha_bar * p * p) * k;
    QuadraticNcBound::solve(theta, eta, omega)
}

/// Compression-noise floor of the relaying scheme:
/// `(N2 (ab P + N1) + P (a ab P + N1)) / (a P)`.
pub fn prop1_min_nc(alpha: f64, params: &GaussianCrbcParams) -> Result<f64, GaussianError> {
    check_unit("alpha", alpha)?;
    let (p, a, n1, n2) = (params.p(), params.a(), params.n1(), params.n2());
    if a == 0.0 {
        return Err(GaussianError::Infeasible("relay has no power (a = 0)"));
    }
    let alpha_bar = 1.0 - alpha;
    Ok((n2 * (alpha_bar * p + n1) + p * (alpha * alpha_bar * p + n1)) / (a * p))
}

pub fn prop1_bounds(
    alpha: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<RateBounds, GaussianError> {
    check_unit("alpha", alpha)?;
    check_nc("nc", nc)?;
    let (p, n1, n2) = (params.p(), params.n1(), params.n2());
    let alpha_bar = 1.0 - alpha;
    let re1 = half_log2_1p(alpha * p / (alpha_bar * p + n1)) - half_log2_1p(alpha * p / n2);
    let re2 = half_log2_1p(alpha_bar * p * (1.0 / (alpha * p + n2) + 1.0 / (n1 + nc)))
        - half_log2_1p(alpha_bar * p / n1);
    Ok(RateBounds { re1, re2 })
}

/// Relaying with independent inputs.
pub fn prop1_rates(
    alpha: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<EquivocationPair, GaussianError> {
    let bounds = prop1_bounds(alpha, nc, params)?;
    let feasible = prop1_min_nc(alpha, params).is_ok_and(|m| nc >= m);
    Ok(bounds.clamp(feasible))
}

pub fn prop2_min_nc(
    alpha: f64,
    gamma: f64,
    params: &GaussianCrbcParams,
) -> Result<QuadraticNcBound, GaussianError> {
    check_unit("alpha", alpha)?;
    check_finite("gamma", gamma)?;
    Ok(dpc_quadratic(
        alpha,
        gamma,
        params.a(),
        params.n2(),
        params.p(),
        params.n1(),
    ))
}

pub fn prop2_bounds(
    alpha: f64,
    gamma: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<RateBounds, GaussianError> {
    check_unit("alpha", alpha)?;
    check_finite("gamma", gamma)?;
    check_nc("nc", nc)?;
    let (p, n1, n2) = (params.p(), params.n1(), params.n2());
    let alpha_bar = 1.0 - alpha;
    let g1 = 1.0 - gamma;
    let loss = dpc_binning_loss(alpha, gamma);

    let re1 =
        half_log2_1p(dpc_re1_signal(alpha, gamma, p, n1)) - half_log2_1p(alpha * p / n2) - loss;

    let eve = alpha * p + n2;
    let relay = n1 + nc;
    let gain = snr(
        alpha_bar * p * relay + alpha_bar * g1 * g1 * p * eve,
        eve * relay,
    );
    let re2 = half_log2_1p(gain) - half_log2_1p(dpc_leak_snr(alpha, gamma, p, n1)) - loss;
    Ok(RateBounds { re1, re2 })
}

/// Relaying with dirty paper coding against user 2's signal.
pub fn prop2_rates(
    alpha: f64,
    gamma: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<EquivocationPair, GaussianError> {
    let bounds = prop2_bounds(alpha, gamma, nc, params)?;
    let feasible = prop2_min_nc(alpha, gamma, params)?.is_feasible(nc);
    Ok(bounds.clamp(feasible))
}

/// Compression-noise floor of the jam + relay scheme:
/// `(ab P (a P + N2 + a bb P) + N1 (P + N2 + a bb P)) / (a beta P)`.
pub fn prop3_min_nc(
    alpha: f64,
    beta: f64,
    params: &GaussianCrbcParams,
) -> Result<f64, GaussianError> {
    check_unit("alpha", alpha)?;
    check_unit("beta", beta)?;
    let (p, a, n1, n2) = (params.p(), params.a(), params.n1(), params.n2());
    if a * beta == 0.0 {
        return Err(GaussianError::Infeasible(
            "no relay power left for the help signal (a * beta = 0)",
        ));
    }
    let alpha_bar = 1.0 - alpha;
    let jam = a * (1.0 - beta) * p;
    Ok((alpha_bar * p * (alpha * p + n2 + jam) + n1 * (p + n2 + jam)) / (a * beta * p))
}

pub fn prop3_bounds(
    alpha: f64,
    beta: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<RateBounds, GaussianError> {
    check_unit("alpha", alpha)?;
    check_unit("beta", beta)?;
    check_nc("nc", nc)?;
    let (p, a, n1, n2) = (params.p(), params.a(), params.n1(), params.n2());
    let alpha_bar = 1.0 - alpha;
    let jam = a * (1.0 - beta) * p;
    let re1 = half_log2_1p(alpha * p / (alpha_bar * p + n1)) - half_log2_1p(alpha * p / (jam + n2));
    let re2 = half_log2_1p(alpha_bar * p * (1.0 / (n1 + nc) + 1.0 / (alpha * p + n2 + jam)))
        - half_log2_1p(alpha_bar * p / n1);
    Ok(RateBounds { re1, re2 })
}

/// Joint jamming and relaying with independent inputs.
pub fn prop3_rates(
    alpha: f64,
    beta: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<EquivocationPair, GaussianError> {
    let bounds = prop3_bounds(alpha, beta, nc, params)?;
    let feasible = prop3_min_nc(alpha, beta, params).is_ok_and(|m| nc >= m);
    Ok(bounds.clamp(feasible))
}

pub fn prop4_min_nc(
    alpha: f64,
    beta: f64,
    gamma: f64,
    params: &GaussianCrbcParams,
) -> Result<QuadraticNcBound, GaussianError> {
    check_unit("alpha", alpha)?;
    check_unit("beta", beta)?;
    check_finite("gamma", gamma)?;
    let (p, a) = (params.p(), params.a());
    let jam = a * (1.0 - beta) * p;
    Ok(dpc_quadratic(
        alpha,
        gamma,
        a * beta,
        jam + params.n2(),
        p,
        params.n1(),
    ))
}

pub fn prop4_bounds(
    alpha: f64,
    beta: f64,
    gamma: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<RateBounds, GaussianError> {
    check_unit("alpha", alpha)?;
    check_unit("beta", beta)?;
    check_finite("gamma", gamma)?;
    check_nc("nc", nc)?;
    let (p, a, n1, n2) = (params.p(), params.a(), params.n1(), params.n2());
    let alpha_bar = 1.0 - alpha;
    let g1 = 1.0 - gamma;
    let jam = a * (1.0 - beta) * p;
    let loss = dpc_binning_loss(alpha, gamma);

    let re1 = half_log2_1p(dpc_re1_signal(alpha, gamma, p, n1))
        - half_log2_1p(alpha * p / (jam + n2))
        - loss;

    let eve = alpha * p + jam + n2;
    let relay = n1 + nc;
    let gain = snr(
        alpha_bar * p * relay + alpha_bar * g1 * g1 * p * eve,
        eve * relay,
    );
    let re2 = half_log2_1p(gain) - half_log2_1p(dpc_leak_snr(alpha, gamma, p, n1)) - loss;
    Ok(RateBounds { re1, re2 })
}

/// Joint jamming and relaying with dirty paper coding.
pub fn prop4_rates(
    alpha: f64,
    beta: f64,
    gamma: f64,
    nc: f64,
    params: &GaussianCrbcParams,
) -> Result<EquivocationPair, GaussianError> {
    let bounds = prop4_bounds(alpha, beta, gamma, nc, params)?;
    let feasible = prop4_min_nc(alpha, beta, gamma, params)?.is_feasible(nc);
    Ok(bounds.clamp(feasible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::wiretap_secrecy;

    fn fig3() -> GaussianCrbcParams {
        GaussianCrbcParams::new(8.0, 100.0, 1.0, 2.0).unwrap()
    }

    #[test]
    fn prop1_min_nc_examples() {
        assert!((prop1_min_nc(0.0, &fig3()).unwrap() - 0.0325).abs() < 1e-15);
        assert!((prop1_min_nc(1.0, &fig3()).unwrap() - 0.0125).abs() < 1e-15);
        let no_relay = fig3().with_a(0.0).unwrap();
        assert!(matches!(
            prop1_min_nc(0.0, &no_relay),
            Err(GaussianError::Infeasible(_))
        ));
        assert!(prop1_min_nc(1.5, &fig3()).is_err());
    }

    #[test]
    fn prop1_extremes() {
        let pure_relay = prop1_rates(0.0, 0.0325, &fig3()).unwrap();
        assert!(pure_relay.feasible);
        assert_eq!(pure_relay.re1, 0.0);
        assert!((pure_relay.re2 - 0.2511).abs() < 5e-4, "{}", pure_relay.re2);

        let no_user2 = prop1_rates(1.0, 0.0125, &fig3()).unwrap();
        assert_eq!(no_user2.re2, 0.0);
        assert!((no_user2.re1 - wiretap_secrecy(8.0, 1.0, 2.0).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn prop1_flags_infeasible_nc() {
        let r = prop1_rates(0.0, 0.01, &fig3()).unwrap();
        assert!(!r.feasible);
        assert!(r.re2 > 0.0);
        assert!(prop1_rates(0.0, -1.0, &fig3()).is_err());
    }

    #[test]
    fn prop2_gamma_zero_floor_matches_prop1() {
        for alpha in [0.0, 0.1, 0.5, 0.9, 1.0] {
            let closed = prop1_min_nc(alpha, &fig3()).unwrap();
            let quad = prop2_min_nc(alpha, 0.0, &fig3()).unwrap().nc_min.unwrap();
            assert!(
                (closed - quad).abs() <= 1e-12 * closed,
                "{alpha}: {closed} {quad}"
            );
        }
    }

    #[test]
    fn prop2_degenerate_theta() {
        let no_relay = fig3().with_a(0.0).unwrap();
        let b = prop2_min_nc(0.5, 0.3, &no_relay).unwrap();
        assert_eq!(b.theta, 0.0);
        assert_eq!(b.nc_min, None);
        assert!(!prop2_rates(0.5, 0.3, 10.0, &no_relay).unwrap().feasible);
    }

    #[test]
    fn prop2_alpha_one_kills_user2() {
        let b = prop2_min_nc(1.0, 0.0, &fig3()).unwrap();
        let nc = b.nc_min.unwrap();
        assert!(nc >= 0.0);
        let r = prop2_rates(1.0, 0.0, nc, &fig3()).unwrap();
        assert_eq!(r.re2, 0.0);
    }

    #[test]
    fn prop2_pure_relay_with_dpc_is_useless() {
        // alpha = 0 with gamma != 0 makes V1 a copy of user 2's signal
        let r = prop2_bounds(0.0, 0.5, 0.1, &fig3()).unwrap();
        assert_eq!(r.re1, f64::NEG_INFINITY);
        assert_eq!(r.re2, f64::NEG_INFINITY);
    }

    #[test]
    fn prop3_full_jamming() {
        let r = prop3_rates(1.0, 0.0, 0.0, &fig3()).unwrap();
        assert!((r.re1 - 1.578).abs() < 0.01, "{}", r.re1);
        assert_eq!(r.re2, 0.0);
        assert!(!r.feasible);
        assert!(prop3_min_nc(1.0, 0.0, &fig3()).is_err());
    }

    #[test]
    fn prop3_without_jamming_is_prop1() {
        for alpha in [0.0, 0.3, 0.7, 1.0] {
            let nc = prop1_min_nc(alpha, &fig3()).unwrap();
            assert_eq!(prop3_min_nc(alpha, 1.0, &fig3()).unwrap(), nc);
            let a = prop3_rates(alpha, 1.0, nc, &fig3()).unwrap();
            let b = prop1_rates(alpha, nc, &fig3()).unwrap();
            assert!((a.re1 - b.re1).abs() <= 1e-15 && (a.re2 - b.re2).abs() <= 1e-15);
        }
        assert_eq!(prop3_rates(0.0, 0.4, 1.0, &fig3()).unwrap().re1, 0.0);
    }

    #[test]
    fn prop4_gamma_zero_floor_matches_prop3() {
        let params = GaussianCrbcParams::new(8.0, 4.0, 2.0, 1.0).unwrap();
        for alpha in [0.0, 0.25, 0.6, 1.0] {
            for beta in [0.1, 0.5, 1.0] {
                let closed = prop3_min_nc(alpha, beta, &params).unwrap();
                let quad = prop4_min_nc(alpha, beta, 0.0, &params)
                    .unwrap()
                    .nc_min
                    .unwrap();
                assert!((closed - quad).abs() <= 1e-12 * closed, "{alpha} {beta}");
            }
        }
    }
}
