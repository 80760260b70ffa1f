use super::channel::DmcSpec;
use super::{DmcError, NORMALIZATION_TOL};

/// A dense probability table in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Table {
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Self, DmcError> {
        let cells = shape
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| DmcError::Shape("table shape overflows".into()))?;
        if shape.is_empty() || shape.contains(&0) || cells != data.len() {
            return Err(DmcError::Shape(format!(
                "shape {shape:?} does not fit {} values",
                data.len()
            )));
        }
        Ok(Self { shape, data })
    }

    pub fn zeros(shape: Vec<usize>) -> Result<Self, DmcError> {
        let cells = shape
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| DmcError::Shape("table shape overflows".into()))?;
        Self::new(shape, vec![0.0; cells])
    }

    /// Deterministic identity `p(b | a) = [a == b]` on an `n x n` table.
    pub fn identity(n: usize) -> Result<Self, DmcError> {
        let mut t = Self::zeros(vec![n, n])?;
        for i in 0..n {
            t.data[i * n + i] = 1.0;
        }
        Ok(t)
    }

    /// A point mass on a single-symbol alphabet, or uniform over `n` symbols.
    pub fn uniform(n: usize) -> Result<Self, DmcError> {
        Self::new(vec![n], vec![1.0 / n as f64; n])
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn offset(&self, idx: &[usize]) -> Option<usize> {
        if idx.len() != self.shape.len() {
            return None;
        }
        let mut off = 0usize;
        for (&i, &d) in idx.iter().zip(&self.shape) {
            if i >= d {
                return None;
            }
            off = off * d + i;
        }
        Some(off)
    }

    pub fn get(&self, idx: &[usize]) -> f64 {
        self.data[self.offset(idx).expect("index out of range")]
    }

    pub fn set(&mut self, idx: &[usize], value: f64) {
        let off = self.offset(idx).expect("index out of range");
        self.data[off] = value;
    }

    /// Checks that the table is a conditional distribution whose first
    /// `n_cond` axes are conditioning variables: entries nonnegative and every
    /// row over the remaining axes summing to one.
    pub fn check_conditional(&self, name: &str, n_cond: usize) -> Result<(), DmcError> {
        if let Some(p) = self.data.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
            return Err(DmcError::InvalidDistribution(format!(
                "{name}: entry {p} is negative or not finite"
            )));
        }
        let row: usize = self.shape[n_cond.min(self.shape.len())..].iter().product();
        for (r, slice) in self.data.chunks(row).enumerate() {
            let total: f64 = slice.iter().sum();
            if (total - 1.0).abs() > NORMALIZATION_TOL {
                return Err(DmcError::InvalidDistribution(format!(
                    "{name}: row {r} sums to {total}"
                )));
            }
        }
        Ok(())
    }
}

fn expect_rank(name: &str, t: &Table, rank: usize) -> Result<(), DmcError> {
    if t.shape.len() != rank {
        return Err(DmcError::Shape(format!(
            "{name} must have {rank} axes, got {:?}",
            t.shape
        )));
    }
    Ok(())
}

fn expect_dim(name: &str, t: &Table, axis: usize, size: usize, what: &str) -> Result<(), DmcError> {
    if t.shape[axis] != size {
        return Err(DmcError::Shape(format!(
            "{name} axis {axis} ({what}) has size {}, expected {size}",
            t.shape[axis]
        )));
    }
    Ok(())
}

/// Shared message-side factors `p(v1, v2) p(x | v1, v2)`.
fn check_message_side(pv1v2: &Table, px_given_v: &Table, nx: usize) -> Result<(), DmcError> {
    expect_rank("pv1v2", pv1v2, 2)?;
    expect_rank("px_given_v", px_given_v, 3)?;
    expect_dim("px_given_v", px_given_v, 0, pv1v2.shape[0], "V1")?;
    expect_dim("px_given_v", px_given_v, 1, pv1v2.shape[1], "V2")?;
    expect_dim("px_given_v", px_given_v, 2, nx, "X")?;
    pv1v2.check_conditional("pv1v2", 0)?;
    px_given_v.check_conditional("px_given_v", 2)
}

/// Input distribution for relaying without jamming:
/// `p(v1,v2) p(x|v1,v2) p(x1) p(yhat|x1,v1,y1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelayFactors {
    /// `[V1, V2]`
    pub pv1v2: Table,
    /// `[V1, V2, X]`
    pub px_given_v: Table,
    /// `[X1]`
    pub px1: Table,
    /// `[X1, V1, Y1, Yhat]`
    pub pyhat: Table,
}

impl RelayFactors {
    pub fn validate(&self, dmc: &DmcSpec) -> Result<(), DmcError> {
        check_message_side(&self.pv1v2, &self.px_given_v, dmc.nx())?;
        expect_rank("px1", &self.px1, 1)?;
        expect_dim("px1", &self.px1, 0, dmc.nx1(), "X1")?;
        expect_rank("pyhat", &self.pyhat, 4)?;
        expect_dim("pyhat", &self.pyhat, 0, dmc.nx1(), "X1")?;
        expect_dim("pyhat", &self.pyhat, 1, self.pv1v2.shape[0], "V1")?;
        expect_dim("pyhat", &self.pyhat, 2, dmc.ny1(), "Y1")?;
        self.px1.check_conditional("px1", 0)?;
        self.pyhat.check_conditional("pyhat", 3)
    }

    pub fn nv1(&self) -> usize {
        self.pv1v2.shape[0]
    }
    pub fn nv2(&self) -> usize {
        self.pv1v2.shape[1]
    }
    pub fn nyhat(&self) -> usize {
        self.pyhat.shape[3]
    }

    /// The same input written with a helper `U = X1`.
    pub fn with_helper_equal_to_relay_input(&self) -> Result<JamRelayFactors, DmcError> {
        let n = self.px1.shape[0];
        Ok(JamRelayFactors {
            pv1v2: self.pv1v2.clone(),
            px_given_v: self.px_given_v.clone(),
            pu: self.px1.clone(),
            px1_given_u: Table::identity(n)?,
            pyhat: self.pyhat.clone(),
        })
    }
}

/// Input distribution for jamming plus relaying:
/// `p(v1,v2) p(x|v1,v2) p(u) p(x1|u) p(yhat|u,v1,y1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct JamRelayFactors {
    /// `[V1, V2]`
    pub pv1v2: Table,
    /// `[V1, V2, X]`
    pub px_given_v: Table,
    /// `[U]`
    pub pu: Table,
    /// `[U, X1]`
    pub px1_given_u: Table,
    /// `[U, V1, Y1, Yhat]`
    pub pyhat: Table,
}

impl JamRelayFactors {
    pub fn validate(&self, dmc: &DmcSpec) -> Result<(), DmcError> {
        check_message_side(&self.pv1v2, &self.px_given_v, dmc.nx())?;
        expect_rank("pu", &self.pu, 1)?;
        expect_rank("px1_given_u", &self.px1_given_u, 2)?;
        expect_dim("px1_given_u", &self.px1_given_u, 0, self.pu.shape[0], "U")?;
        expect_dim("px1_given_u", &self.px1_given_u, 1, dmc.nx1(), "X1")?;
        expect_rank("pyhat", &self.pyhat, 4)?;
        expect_dim("pyhat", &self.pyhat, 0, self.pu.shape[0], "U")?;
        expect_dim("pyhat", &self.pyhat, 1, self.pv1v2.shape[0], "V1")?;
        expect_dim("pyhat", &self.pyhat, 2, dmc.ny1(), "Y1")?;
        self.pu.check_conditional("pu", 0)?;
        self.px1_given_u.check_conditional("px1_given_u", 1)?;
        self.pyhat.check_conditional("pyhat", 3)
    }

    pub fn nu(&self) -> usize {
        self.pu.shape[0]
    }
    pub fn nyhat(&self) -> usize {
        self.pyhat.shape[3]
    }
}

/// Input distribution for the two-sided model:
/// `p(v1,v2) p(x|v1,v2) p(u1,x1) p(yhat1|u1,y1) p(u2,x2) p(yhat2|u2,y2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSidedFactors {
    /// `[V1, V2]`
    pub pv1v2: Table,
    /// `[V1, V2, X]`
    pub px_given_v: Table,
    /// `[U1, X1]`
    pub pu1x1: Table,
    /// `[U1, Y1, Yhat1]`
    pub pyhat1: Table,
    /// `[U2, X2]`
    pub pu2x2: Table,
    /// `[U2, Y2, Yhat2]`
    pub pyhat2: Table,
}

impl TwoSidedFactors {
    pub fn validate(&self, dmc: &DmcSpec) -> Result<(), DmcError> {
        check_message_side(&self.pv1v2, &self.px_given_v, dmc.nx())?;
        expect_rank("pu1x1", &self.pu1x1, 2)?;
        expect_dim("pu1x1", &self.pu1x1, 1, dmc.nx1(), "X1")?;
        expect_rank("pu2x2", &self.pu2x2, 2)?;
        expect_dim("pu2x2", &self.pu2x2, 1, dmc.nx2(), "X2")?;
        expect_rank("pyhat1", &self.pyhat1, 3)?;
        expect_dim("pyhat1", &self.pyhat1, 0, self.pu1x1.shape[0], "U1")?;
        expect_dim("pyhat1", &self.pyhat1, 1, dmc.ny1(), "Y1")?;
        expect_rank("pyhat2", &self.pyhat2, 3)?;
        expect_dim("pyhat2", &self.pyhat2, 0, self.pu2x2.shape[0], "U2")?;
        expect_dim("pyhat2", &self.pyhat2, 1, dmc.ny2(), "Y2")?;
        self.pu1x1.check_conditional("pu1x1", 0)?;
        self.pu2x2.check_conditional("pu2x2", 0)?;
        self.pyhat1.check_conditional("pyhat1", 2)?;
        self.pyhat2.check_conditional("pyhat2", 2)
    }
}
