//! Parsers for compound flag values.

use std::num::ParseFloatError;

fn number(s: &str) -> Result<f64, String> {
    let t = s.trim();
    t.parse()
        .map_err(|e: ParseFloatError| format!("`{t}` is not a number ({e})"))
}

/// Comma-separated list of numbers, e.g. `1,10,100`.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Err("empty list".into());
    }
    s.split(',').map(number).collect()
}

/// Closed interval written `lo:hi` or `lo,hi`.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .or_else(|| s.split_once(','))
        .ok_or_else(|| format!("`{s}` is not a range, expected lo:hi"))?;
    let (lo, hi) = (number(lo)?, number(hi)?);
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(format!("range `{s}` must be finite"));
    }
    if lo > hi {
        return Err(format!("range `{s}` is reversed"));
    }
    Ok((lo, hi))
}

/// Grid point counts `alpha[,beta[,gamma]]`; omitted entries keep defaults.
pub fn parse_grid(s: &str) -> Result<Vec<usize>, String> {
    let counts = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .map_err(|e| format!("`{t}` is not a point count ({e})"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if counts.len() > 3 {
        return Err(format!("`{s}` has more than 3 grid sizes"));
    }
    Ok(counts)
}
