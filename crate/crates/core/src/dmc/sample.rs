//! Random channels and input distributions, uniform on each probability
//! simplex. Useful for property tests and for probing the outer bound with
//! random auxiliaries.

use rand::Rng;

use super::channel::DmcSpec;
use super::factors::{JamRelayFactors, RelayFactors, Table, TwoSidedFactors};

/// A uniformly random point of the `n`-symbol simplex.
pub fn simplex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.gen::<f64>()).ln() + f64::MIN_POSITIVE)
        .collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|v| v / total).collect()
}

/// A table whose first `n_cond` axes condition the rest.
pub fn conditional<R: Rng + ?Sized>(rng: &mut R, shape: &[usize], n_cond: usize) -> Table {
    let row: usize = shape[n_cond..].iter().product();
    let rows: usize = shape[..n_cond].iter().product();
    let data = (0..rows).flat_map(|_| simplex(rng, row)).collect();
    Table::new(shape.to_vec(), data).expect("shape and data agree")
}

pub fn channel<R: Rng + ?Sized>(
    rng: &mut R,
    nx: usize,
    nx1: usize,
    ny1: usize,
    ny2: usize,
) -> DmcSpec {
    let t = conditional(rng, &[nx, nx1, ny1, ny2], 2);
    DmcSpec::one_sided(nx, nx1, ny1, ny2, t.data().to_vec()).expect("valid by construction")
}

pub fn two_sided_channel<R: Rng + ?Sized>(
    rng: &mut R,
    nx: usize,
    nx1: usize,
    nx2: usize,
    ny1: usize,
    ny2: usize,
) -> DmcSpec {
    let t = conditional(rng, &[nx, nx1, nx2, ny1, ny2], 3);
    DmcSpec::two_sided(nx, nx1, nx2, ny1, ny2, t.data().to_vec()).expect("valid by construction")
}

/// `p(y1 | x, x1) p(y2 | x1, y1)`: user 2 sees a degraded copy.
pub fn degraded_channel<R: Rng + ?Sized>(
    rng: &mut R,
    nx: usize,
    nx1: usize,
    ny1: usize,
    ny2: usize,
) -> DmcSpec {
    let first = conditional(rng, &[nx, nx1, ny1], 2);
    let second = conditional(rng, &[nx1, ny1, ny2], 2);
    DmcSpec::from_fn(nx, nx1, ny1, ny2, |x, x1, y1, y2| {
        first.get(&[x, x1, y1]) * second.get(&[x1, y1, y2])
    })
    .expect("valid by construction")
}

/// `p(y2 | x, x1) p(y1 | x1, y2)`: user 1 sees a degraded copy.
pub fn reverse_degraded_channel<R: Rng + ?Sized>(
    rng: &mut R,
    nx: usize,
    nx1: usize,
    ny1: usize,
    ny2: usize,
) -> DmcSpec {
    let first = conditional(rng, &[nx, nx1, ny2], 2);
    let second = conditional(rng, &[nx1, ny2, ny1], 2);
    DmcSpec::from_fn(nx, nx1, ny1, ny2, |x, x1, y1, y2| {
        first.get(&[x, x1, y2]) * second.get(&[x1, y2, y1])
    })
    .expect("valid by construction")
}

/// Auxiliary alphabet sizes for the relay inputs.
#[derive(Debug, Clone, Copy)]
pub struct AuxSizes {
    pub v1: usize,
    pub v2: usize,
    pub u: usize,
    pub yhat: usize,
}

impl Default for AuxSizes {
    fn default() -> Self {
        Self {
            v1: 2,
            v2: 2,
            u: 2,
            yhat: 2,
        }
    }
}

pub fn relay_factors<R: Rng + ?Sized>(rng: &mut R, dmc: &DmcSpec, s: AuxSizes) -> RelayFactors {
    RelayFactors {
        pv1v2: conditional(rng, &[s.v1, s.v2], 0),
        px_given_v: conditional(rng, &[s.v1, s.v2, dmc.nx()], 2),
        px1: conditional(rng, &[dmc.nx1()], 0),
        pyhat: conditional(rng, &[dmc.nx1(), s.v1, dmc.ny1(), s.yhat], 3),
    }
}

pub fn jam_relay_factors<R: Rng + ?Sized>(
    rng: &mut R,
    dmc: &DmcSpec,
    s: AuxSizes,
) -> JamRelayFactors {
    JamRelayFactors {
        pv1v2: conditional(rng, &[s.v1, s.v2], 0),
        px_given_v: conditional(rng, &[s.v1, s.v2, dmc.nx()], 2),
        pu: conditional(rng, &[s.u], 0),
        px1_given_u: conditional(rng, &[s.u, dmc.nx1()], 1),
        pyhat: conditional(rng, &[s.u, s.v1, dmc.ny1(), s.yhat], 3),
    }
}

/// `s.u` and `s.yhat` are used for both relays.
pub fn two_sided_factors<R: Rng + ?Sized>(
    rng: &mut R,
    dmc: &DmcSpec,
    s: AuxSizes,
) -> TwoSidedFactors {
    TwoSidedFactors {
        pv1v2: conditional(rng, &[s.v1, s.v2], 0),
        px_given_v: conditional(rng, &[s.v1, s.v2, dmc.nx()], 2),
        pu1x1: conditional(rng, &[s.u, dmc.nx1()], 0),
        pyhat1: conditional(rng, &[s.u, dmc.ny1(), s.yhat], 2),
        pu2x2: conditional(rng, &[s.u, dmc.nx2()], 0),
        pyhat2: conditional(rng, &[s.u, dmc.ny2(), s.yhat], 2),
    }
}

/// An auxiliary joint `p(v1, v2) p(u | v1, v2) p(x, x1 | v1, v2)`, which
/// satisfies the outer bound's Markov condition by construction.
pub fn outer_aux<R: Rng + ?Sized>(
    rng: &mut R,
    dmc: &DmcSpec,
    nu: usize,
    nv1: usize,
    nv2: usize,
) -> Table {
    let pv = conditional(rng, &[nv1, nv2], 0);
    let pu = conditional(rng, &[nv1, nv2, nu], 2);
    let pin = conditional(rng, &[nv1, nv2, dmc.nx(), dmc.nx1()], 2);
    let shape = vec![nu, nv1, nv2, dmc.nx(), dmc.nx1()];
    let mut t = Table::zeros(shape).expect("nonzero sizes");
    for u in 0..nu {
        for v1 in 0..nv1 {
            for v2 in 0..nv2 {
                for x in 0..dmc.nx() {
                    for x1 in 0..dmc.nx1() {
                        let p =
                            pv.get(&[v1, v2]) * pu.get(&[v1, v2, u]) * pin.get(&[v1, v2, x, x1]);
                        t.set(&[u, v1, v2, x, x1], p);
                    }
                }
            }
        }
    }
    t
}

/// A random channel input `p(x, x1)`.
pub fn input<R: Rng + ?Sized>(rng: &mut R, dmc: &DmcSpec) -> Table {
    conditional(rng, &[dmc.nx(), dmc.nx1()], 0)
}
