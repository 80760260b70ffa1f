//! Jointly Gaussian random variables built as linear combinations of
//! independent zero-mean sources. Conditional mutual information is computed
//! from log-determinants of covariance sub-matrices.

#![allow(dead_code)]

#[derive(Clone, Debug)]
pub struct Lin(pub Vec<f64>);

pub struct Sources {
    var: Vec<f64>,
}

impl Sources {
    pub fn new() -> Self {
        Self { var: Vec::new() }
    }

    /// Adds an independent source with the given variance.
    pub fn source(&mut self, variance: f64) -> usize {
        self.var.push(variance);
        self.var.len() - 1
    }

    pub fn of(&self, terms: &[(usize, f64)]) -> Lin {
        let mut c = vec![0.0; self.var.len()];
        for &(i, w) in terms {
            c[i] += w;
        }
        Lin(c)
    }

    fn cov(&self, a: &Lin, b: &Lin) -> f64 {
        a.0.iter()
            .zip(&b.0)
            .zip(&self.var)
            .map(|((x, y), v)| x * y * v)
            .sum()
    }

    fn logdet2(&self, vars: &[&Lin]) -> f64 {
        let n = vars.len();
        if n == 0 {
            return 0.0;
        }
        let mut m: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| self.cov(vars[i], vars[j])).collect())
            .collect();
        // Symmetric elimination in the given order; pivots that vanish belong to
        // variables determined by earlier ones and are dropped (pseudo-determinant),
        // which keeps I(A;B|C) right when C holds copies or constants.
        let scale = (0..n)
            .map(|i| m[i][i].abs())
            .fold(0.0, f64::max)
            .max(1e-300);
        let mut logdet = 0.0;
        for k in 0..n {
            let d = m[k][k];
            if d.abs() <= 1e-12 * scale {
                continue;
            }
            logdet += d.abs().log2();
            for i in k + 1..n {
                let f = m[i][k] / d;
                for j in k..n {
                    m[i][j] -= f * m[k][j];
                }
            }
        }
        logdet
    }

    /// I(A; B | C) in bits.
    pub fn cmi(&self, a: &[&Lin], b: &[&Lin], c: &[&Lin]) -> f64 {
        let ac: Vec<&Lin> = a.iter().chain(c).copied().collect();
        let bc: Vec<&Lin> = b.iter().chain(c).copied().collect();
        let abc: Vec<&Lin> = a.iter().chain(b).chain(c).copied().collect();
        0.5 * (self.logdet2(&ac) + self.logdet2(&bc) - self.logdet2(&abc) - self.logdet2(c))
    }

    pub fn mi(&self, a: &[&Lin], b: &[&Lin]) -> f64 {
        self.cmi(a, b, &[])
    }
}

pub struct OneSidedEval {
    pub re1: f64,
    pub re2: f64,
    /// Left-hand minus right-hand side of the relay-link constraint.
    pub slack: f64,
}

/// Jam + relay scheme with DPC evaluated from first principles. `beta = 1`
/// removes jamming (relaying only), `gamma = 0` removes DPC.
pub fn one_sided(
    p: f64,
    a: f64,
    n1: f64,
    n2: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    nc: f64,
) -> OneSidedEval {
    let mut s = Sources::new();
    let u1 = s.source(alpha * p);
    let u2 = s.source((1.0 - alpha) * p);
    let help = s.source(a * beta * p);
    let jam = s.source(a * (1.0 - beta) * p);
    let z1 = s.source(n1);
    let z2 = s.source(n2);
    let zc = s.source(nc);

    let v1 = s.of(&[(u1, 1.0), (u2, gamma)]);
    let v2 = s.of(&[(u2, 1.0)]);
    let u = s.of(&[(help, 1.0)]);
    let x1 = s.of(&[(help, 1.0), (jam, 1.0)]);
    let y1 = s.of(&[(u1, 1.0), (u2, 1.0), (z1, 1.0)]);
    let y2 = s.of(&[(u1, 1.0), (u2, 1.0), (help, 1.0), (jam, 1.0), (z2, 1.0)]);
    let yhat = s.of(&[(u2, 1.0 - gamma), (z1, 1.0), (zc, 1.0)]);

    let binning = s.mi(&[&v1], &[&v2]);
    let re1 = s.cmi(&[&v1], &[&y1], &[&x1]) - s.cmi(&[&v1], &[&y2, &yhat], &[&v2, &u]) - binning;
    let re2 = s.cmi(&[&v2], &[&y2, &yhat], &[&u]) - s.cmi(&[&v2], &[&y1], &[&v1, &x1]) - binning;
    let slack = s.cmi(&[&yhat], &[&y1], &[&x1, &v1, &u]) - s.mi(&[&yhat, &u], &[&y2]);
    OneSidedEval { re1, re2, slack }
}

pub struct TwoSidedEval {
    pub re1: f64,
    pub re2: f64,
    pub slack1: f64,
    pub slack2: f64,
}

#[allow(clippy::too_many_arguments)]
pub fn two_sided(
    p: f64,
    a1: f64,
    a2: f64,
    n1: f64,
    n2: f64,
    alpha: f64,
    beta1: f64,
    beta2: f64,
    nc1: f64,
    nc2: f64,
) -> TwoSidedEval {
    let mut s = Sources::new();
    let g1 = s.source(alpha * p);
    let g2 = s.source((1.0 - alpha) * p);
    let h1 = s.source(a1 * beta1 * p);
    let j1 = s.source(a1 * (1.0 - beta1) * p);
    let h2 = s.source(a2 * beta2 * p);
    let j2 = s.source(a2 * (1.0 - beta2) * p);
    let z1 = s.source(n1);
    let z2 = s.source(n2);
    let zc1 = s.source(nc1);
    let zc2 = s.source(nc2);

    let v1 = s.of(&[(g1, 1.0)]);
    let v2 = s.of(&[(g2, 1.0)]);
    let u1 = s.of(&[(h1, 1.0)]);
    let x1 = s.of(&[(h1, 1.0), (j1, 1.0)]);
    let u2 = s.of(&[(h2, 1.0)]);
    let x2 = s.of(&[(h2, 1.0), (j2, 1.0)]);
    let y1 = s.of(&[(g1, 1.0), (g2, 1.0), (h2, 1.0), (j2, 1.0), (z1, 1.0)]);
    let y2 = s.of(&[(g1, 1.0), (g2, 1.0), (h1, 1.0), (j1, 1.0), (z2, 1.0)]);
    let yhat1 = s.of(&[
        (g1, 1.0),
        (g2, 1.0),
        (h2, 1.0),
        (j2, 1.0),
        (z1, 1.0),
        (zc1, 1.0),
    ]);
    let yhat2 = s.of(&[
        (g1, 1.0),
        (g2, 1.0),
        (h1, 1.0),
        (j1, 1.0),
        (z2, 1.0),
        (zc2, 1.0),
    ]);

    let r1 = s.cmi(&[&v1], &[&y1, &yhat2], &[&x1, &u2]);
    let r2 = s.cmi(&[&v2], &[&y2, &yhat1], &[&x2, &u1]);
    let re1 = r1 - s.cmi(&[&v1], &[&y2, &yhat1], &[&v2, &x2, &u1]);
    let re2 = r2 - s.cmi(&[&v2], &[&y1, &yhat2], &[&v1, &x1, &u2]);
    let slack1 = s.cmi(&[&yhat1], &[&y1], &[&u1, &x1, &u2]) - s.cmi(&[&yhat1, &u1], &[&y2], &[&x2]);
    let slack2 = s.cmi(&[&yhat2], &[&y2], &[&u2, &x2, &u1]) - s.cmi(&[&yhat2, &u2], &[&y1], &[&x1]);
    TwoSidedEval {
        re1,
        re2,
        slack1,
        slack2,
    }
}
