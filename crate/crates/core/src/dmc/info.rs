//! Dense joint probability tensors and Shannon information measures (bits).

use super::{DmcError, NORMALIZATION_TOL, ZERO_PROB};

/// Visits every multi-index of `dims` in row-major order.
pub(crate) fn for_each_index(dims: &[usize], mut f: impl FnMut(&[usize])) {
    if dims.contains(&0) {
        return;
    }
    let mut idx = vec![0usize; dims.len()];
    loop {
        f(&idx);
        let mut k = dims.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

pub(crate) fn checked_volume(dims: &[usize], cap: usize) -> Result<usize, DmcError> {
    let mut cells: usize = 1;
    for &d in dims {
        cells = cells
            .checked_mul(d)
            .filter(|&c| c <= cap)
            .ok_or(DmcError::TooLarge { cap })?;
    }
    Ok(cells)
}

fn plogp_sum(probs: impl Iterator<Item = f64>) -> f64 {
    -probs
        .filter(|&p| p > ZERO_PROB)
        .map(|p| p * p.log2())
        .sum::<f64>()
}

/// Shannon entropy of a probability vector, with `0 log 0 = 0`.
pub fn entropy(dist: &[f64]) -> Result<f64, DmcError> {
    validate_distribution(dist)?;
    Ok(plogp_sum(dist.iter().copied()))
}

pub(crate) fn validate_distribution(dist: &[f64]) -> Result<(), DmcError> {
    if let Some(&p) = dist.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
        return Err(DmcError::InvalidDistribution(format!(
            "entry {p} is negative or not finite"
        )));
    }
    let total: f64 = dist.iter().sum();
    if (total - 1.0).abs() > NORMALIZATION_TOL {
        return Err(DmcError::InvalidDistribution(format!(
            "entries sum to {total}, expected 1"
        )));
    }
    Ok(())
}

/// A joint distribution over several finite variables, stored densely in
/// row-major order. Variables are referred to by axis number.
#[derive(Debug, Clone, PartialEq)]
pub struct Joint {
    dims: Vec<usize>,
    probs: Vec<f64>,
}

impl Joint {
    pub fn new(dims: Vec<usize>, probs: Vec<f64>) -> Result<Self, DmcError> {
        let cells: usize = dims.iter().product();
        if cells != probs.len() || dims.contains(&0) {
            return Err(DmcError::Shape(format!(
                "dims {dims:?} need {cells} cells, got {}",
                probs.len()
            )));
        }
        validate_distribution(&probs)?;
        Ok(Self { dims, probs })
    }

    /// Builds the tensor cell by cell. The caller guarantees normalization.
    pub(crate) fn from_fn(
        dims: Vec<usize>,
        cap: usize,
        mut f: impl FnMut(&[usize]) -> f64,
    ) -> Result<Self, DmcError> {
        let cells = checked_volume(&dims, cap)?;
        let mut probs = Vec::with_capacity(cells);
        for_each_index(&dims, |idx| probs.push(f(idx)));
        Ok(Self { dims, probs })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    fn check_axes(&self, axes: &[usize]) -> Result<(), DmcError> {
        match axes.iter().find(|&&a| a >= self.dims.len()) {
            Some(a) => Err(DmcError::Shape(format!(
                "axis {a} out of range for a {}-variable joint",
                self.dims.len()
            ))),
            None => Ok(()),
        }
    }

    /// Marginal probabilities over `axes`, in row-major order of the kept
    /// axes sorted ascending.
    pub fn marginal(&self, axes: &[usize]) -> Vec<f64> {
        let mut keep = vec![false; self.dims.len()];
        for &a in axes {
            keep[a] = true;
        }
        let mut stride = vec![0usize; self.dims.len()];
        let mut size = 1usize;
        for k in (0..self.dims.len()).rev() {
            if keep[k] {
                stride[k] = size;
                size *= self.dims[k];
            }
        }
        let mut out = vec![0.0; size];
        let mut cell = 0usize;
        for_each_index(&self.dims, |idx| {
            let m: usize = idx.iter().zip(&stride).map(|(i, s)| i * s).sum();
            out[m] += self.probs[cell];
            cell += 1;
        });
        out
    }

    /// Entropy of the variables on `axes` (duplicates ignored).
    pub fn entropy_of(&self, axes: &[usize]) -> f64 {
        if axes.is_empty() {
            return 0.0;
        }
        plogp_sum(self.marginal(axes).into_iter())
    }

    /// `I(A; B | C)` in bits, clamped at zero against rounding.
    pub fn cond_mutual_info(&self, a: &[usize], b: &[usize], c: &[usize]) -> f64 {
        let union = |sets: &[&[usize]]| {
            let mut v: Vec<usize> = sets.iter().flat_map(|s| s.iter().copied()).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let h_ac = self.entropy_of(&union(&[a, c]));
        let h_bc = self.entropy_of(&union(&[b, c]));
        let h_abc = self.entropy_of(&union(&[a, b, c]));
        let h_c = self.entropy_of(&union(&[c]));
        (h_ac + h_bc - h_abc - h_c).max(0.0)
    }

    pub fn mutual_info(&self, a: &[usize], b: &[usize]) -> f64 {
        self.cond_mutual_info(a, b, &[])
    }
}

/// `I(A; B | C)` with axis validation.
pub fn cond_mutual_info(
    joint: &Joint,
    a: &[usize],
    b: &[usize],
    c: &[usize],
) -> Result<f64, DmcError> {
    joint.check_axes(a)?;
    joint.check_axes(b)?;
    joint.check_axes(c)?;
    Ok(joint.cond_mutual_info(a, b, c))
}
