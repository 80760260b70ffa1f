use super::{check_positive, half_log2_1p, positive, GaussianError};

fn check_power(p: f64) -> Result<(), GaussianError> {
    if p.is_finite() && p >= 0.0 {
        Ok(())
    } else {
        Err(GaussianError::InvalidParameter {
            name: "P",
            value: p,
            reason: "must be finite and >= 0",
        })
    }
}

/// Secrecy capacity of the Gaussian wiretap channel from the transmitter to
/// user 1 with user 2 eavesdropping:
/// `max(0, 1/2 log2(1 + P/N1) - 1/2 log2(1 + P/N2))`.
pub fn wiretap_secrecy(p: f64, n1: f64, n2: f64) -> Result<f64, GaussianError> {
    check_positive("P", p)?;
    check_positive("N1", n1)?;
    check_positive("N2", n2)?;
    Ok(positive(half_log2_1p(p / n1) - half_log2_1p(p / n2)))
}

/// Largest user-2 equivocation rate of the relaying schemes as the relay
/// power grows without bound.
///
/// `P = 0` is accepted and gives 0.
pub fn corollary1_limit(p: f64, n1: f64, n2: f64) -> Result<f64, GaussianError> {
    check_power(p)?;
    check_positive("N1", n1)?;
    check_positive("N2", n2)?;
    // difference of logs, folded into one ratio to avoid cancellation
    Ok(half_log2_1p((p / n2) / (1.0 + p / n1)))
}

/// Sato-type outer bound on user 2's equivocation: user 2 is handed user 1's
/// observation, so the bound is `1/2 log2(1 + P N1 / (N2 (P + N1)))`.
pub fn gaussian_sato_bound(p: f64, n1: f64, n2: f64) -> Result<f64, GaussianError> {
    check_power(p)?;
    check_positive("N1", n1)?;
    check_positive("N2", n2)?;
    Ok(half_log2_1p(p * n1 / (n2 * (p + n1))))
}

/// The estimation-error bound `1/2 log2(((1-s)^2 P + s^2 N1 + N2) / N2)`
/// obtained by subtracting `s * Y1` from `X + Z2`. Valid for every `s`; the
/// Sato bound is its minimum, attained at `s = P / (P + N1)`.
pub fn sato_objective(s: f64, p: f64, n1: f64, n2: f64) -> f64 {
    let t = 1.0 - s;
    0.5 * ((t * t * p + s * s * n1 + n2) / n2).log2()
}

/// Smallest relay power ratio for which jamming gives user 1 positive
/// secrecy: `max(0, (N1 - N2) / P)`.
pub fn jamming_threshold(p: f64, n1: f64, n2: f64) -> Result<f64, GaussianError> {
    check_positive("P", p)?;
    check_positive("N1", n1)?;
    check_positive("N2", n2)?;
    Ok(positive((n1 - n2) / p))
}
