//! Second implementation of the information measures: a sparse list of joint
//! cells and the defining log-ratio sum, no entropies involved.

#![allow(dead_code)]

use std::collections::HashMap;

use crbc::dmc::{DmcSpec, JamRelayFactors, RelayFactors, Table};

pub struct Cells(pub Vec<(Vec<usize>, f64)>);

fn key(idx: &[usize], axes: &[usize]) -> Vec<usize> {
    axes.iter().map(|&a| idx[a]).collect()
}

impl Cells {
    fn marginal(&self, axes: &[usize]) -> HashMap<Vec<usize>, f64> {
        let mut m = HashMap::new();
        for (idx, p) in &self.0 {
            *m.entry(key(idx, axes)).or_insert(0.0) += p;
        }
        m
    }

    /// Sum of p(a,b,c) log p(a,b,c) p(c) / (p(a,c) p(b,c)).
    pub fn cmi(&self, a: &[usize], b: &[usize], c: &[usize]) -> f64 {
        let cat = |s: &[&[usize]]| s.concat();
        let abc = self.marginal(&cat(&[a, b, c]));
        let ac = self.marginal(&cat(&[a, c]));
        let bc = self.marginal(&cat(&[b, c]));
        let cm = self.marginal(c);
        let (na, nb) = (a.len(), b.len());
        abc.iter()
            .filter(|(_, &p)| p > 0.0)
            .map(|(k, &p)| {
                let (ka, rest) = k.split_at(na);
                let (kb, kc) = rest.split_at(nb);
                let pac = ac[&[ka, kc].concat()];
                let pbc = bc[&[kb, kc].concat()];
                let pc = cm[kc];
                p * (p * pc / (pac * pbc)).log2()
            })
            .sum()
    }

    pub fn mi(&self, a: &[usize], b: &[usize]) -> f64 {
        self.cmi(a, b, &[])
    }
}

/// Cells over `(V1, V2, X, X1, Y1, Yhat, Y2)`.
pub fn relay_cells(dmc: &DmcSpec, f: &RelayFactors) -> Cells {
    let s = f.pyhat.shape();
    let (nv1, nv2, nyh) = (f.pv1v2.shape()[0], f.pv1v2.shape()[1], s[3]);
    let mut out = Vec::new();
    for y2 in 0..dmc.ny2() {
        for yh in 0..nyh {
            for y1 in 0..dmc.ny1() {
                for x1 in 0..dmc.nx1() {
                    for x in 0..dmc.nx() {
                        for v2 in 0..nv2 {
                            for v1 in 0..nv1 {
                                let p = dmc.p(x, x1, 0, y1, y2)
                                    * f.pyhat.get(&[x1, v1, y1, yh])
                                    * f.px1.get(&[x1])
                                    * f.px_given_v.get(&[v1, v2, x])
                                    * f.pv1v2.get(&[v1, v2]);
                                if p > 0.0 {
                                    out.push((vec![v1, v2, x, x1, y1, yh, y2], p));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Cells(out)
}

pub struct Bounds {
    pub r1: f64,
    pub r2: f64,
    pub re1: f64,
    pub re2: f64,
    pub slack: f64,
}

pub fn relay_bounds(dmc: &DmcSpec, f: &RelayFactors) -> Bounds {
    let c = relay_cells(dmc, f);
    let (v1, v2, x1, y1, yh, y2) = (0, 1, 3, 4, 5, 6);
    let bin = c.mi(&[v1], &[v2]);
    let r1 = c.cmi(&[v1], &[y1], &[x1]);
    let r2 = c.cmi(&[v2], &[y2, yh], &[x1]);
    Bounds {
        r1,
        r2,
        re1: r1 - c.cmi(&[v1], &[y2, yh], &[v2, x1]) - bin,
        re2: r2 - c.cmi(&[v2], &[y1], &[v1, x1]) - bin,
        slack: c.cmi(&[yh], &[y1], &[x1, v1]) - c.mi(&[yh, x1], &[y2]),
    }
}

/// Cells over `(V1, V2, X, U, X1, Y1, Yhat, Y2)`.
pub fn jam_relay_bounds(dmc: &DmcSpec, f: &JamRelayFactors) -> Bounds {
    let (nv1, nv2) = (f.pv1v2.shape()[0], f.pv1v2.shape()[1]);
    let (nu, nyh) = (f.pu.shape()[0], f.pyhat.shape()[3]);
    let mut out = Vec::new();
    for v1 in 0..nv1 {
        for v2 in 0..nv2 {
            for x in 0..dmc.nx() {
                for u in 0..nu {
                    for x1 in 0..dmc.nx1() {
                        for y1 in 0..dmc.ny1() {
                            for yh in 0..nyh {
                                for y2 in 0..dmc.ny2() {
                                    let p = f.pyhat.get(&[u, v1, y1, yh])
                                        * dmc.p(x, x1, 0, y1, y2)
                                        * f.px1_given_u.get(&[u, x1])
                                        * f.pu.get(&[u])
                                        * f.px_given_v.get(&[v1, v2, x])
                                        * f.pv1v2.get(&[v1, v2]);
                                    if p > 0.0 {
                                        out.push((vec![v1, v2, x, u, x1, y1, yh, y2], p));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let c = Cells(out);
    let (v1, v2, u, x1, y1, yh, y2) = (0, 1, 3, 4, 5, 6, 7);
    let bin = c.mi(&[v1], &[v2]);
    let r1 = c.cmi(&[v1], &[y1], &[x1]);
    let r2 = c.cmi(&[v2], &[y2, yh], &[u]);
    Bounds {
        r1,
        r2,
        re1: r1 - c.cmi(&[v1], &[y2, yh], &[v2, u]) - bin,
        re2: r2 - c.cmi(&[v2], &[y1], &[v1, x1]) - bin,
        slack: c.cmi(&[yh], &[y1], &[x1, v1, u]) - c.mi(&[yh, u], &[y2]),
    }
}

/// Cells over `(X, X1, Y1, Y2)` for an input `p(x, x1)`.
pub fn input_cells(dmc: &DmcSpec, pxx1: &Table) -> Cells {
    let mut out = Vec::new();
    for x in 0..dmc.nx() {
        for x1 in 0..dmc.nx1() {
            for y1 in 0..dmc.ny1() {
                for y2 in 0..dmc.ny2() {
                    let p = pxx1.get(&[x, x1]) * dmc.p(x, x1, 0, y1, y2);
                    if p > 0.0 {
                        out.push((vec![x, x1, y1, y2], p));
                    }
                }
            }
        }
    }
    Cells(out)
}

/// `I(X; Y2 | X1, Y1)` from flat `p(x, x1)` on a binary 2x2x2x2 channel,
/// written out directly for speed.
pub fn thm3_direct_2222(w: &[f64; 16], p: &[f64; 4]) -> f64 {
    let mut total = 0.0;
    for x1 in 0..2 {
        for y1 in 0..2 {
            let mut joint = [[0.0f64; 2]; 2]; // [x][y2]
            for x in 0..2 {
                for y2 in 0..2 {
                    joint[x][y2] = p[x * 2 + x1] * w[((x * 2 + x1) * 2 + y1) * 2 + y2];
                }
            }
            let c: f64 = joint.iter().flatten().sum();
            if c <= 0.0 {
                continue;
            }
            for x in 0..2 {
                let px: f64 = joint[x].iter().sum();
                for y2 in 0..2 {
                    let q = joint[x][y2];
                    if q <= 0.0 {
                        continue;
                    }
                    let py: f64 = joint[0][y2] + joint[1][y2];
                    total += q * (q * c / (px * py)).log2();
                }
            }
        }
    }
    total
}
