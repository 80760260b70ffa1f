//! Outer bounds: point evaluation with explicit auxiliaries, and the
//! auxiliary-free bound on user 2's equivocation.

use rayon::prelude::*;

use super::channel::DmcSpec;
use super::factors::Table;
use super::info::{validate_distribution, Joint};
use super::{DmcError, DEFAULT_CELL_CAP, MARKOV_TOL, ZERO_PROB};

/// Largest simplex grid the maximizer will enumerate.
pub const MAX_GRID_POINTS: usize = 5_000_000;
const REFINE_PASSES: usize = 20;
const MAX_SWEEPS_PER_PASS: usize = 200;

/// Outer-bound terms for one auxiliary joint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuterPoint {
    pub re1_tilde: f64,
    pub re2_tilde: f64,
    pub re1_bar: f64,
    pub re2_bar: f64,
    pub r1: f64,
    pub r2: f64,
}

impl OuterPoint {
    pub fn re1_bound(&self) -> f64 {
        self.re1_tilde.min(self.re1_bar).min(self.r1)
    }

    pub fn re2_bound(&self) -> f64 {
        self.re2_tilde.min(self.re2_bar).min(self.r2)
    }
}

fn require_one_sided(dmc: &DmcSpec) -> Result<(), DmcError> {
    if dmc.is_two_sided() {
        return Err(DmcError::Shape(
            "outer bounds are for channels without X2".into(),
        ));
    }
    Ok(())
}

fn check_input(dmc: &DmcSpec, pxx1: &Table) -> Result<(), DmcError> {
    if pxx1.shape() != [dmc.nx(), dmc.nx1()] {
        return Err(DmcError::Shape(format!(
            "input distribution has shape {:?}, channel needs [{}, {}]",
            pxx1.shape(),
            dmc.nx(),
            dmc.nx1()
        )));
    }
    validate_distribution(pxx1.data())
}

/// Rejects auxiliaries where `U` carries information about `(X, X1)` beyond
/// `(V1, V2)`. Conditional slices are compared in total variation.
fn check_markov(aux: &Table) -> Result<(), DmcError> {
    let s = aux.shape();
    let (nu, nv1, nv2, nxx) = (s[0], s[1], s[2], s[3] * s[4]);
    for v1 in 0..nv1 {
        for v2 in 0..nv2 {
            let slice = |u: usize| {
                let base = ((u * nv1 + v1) * nv2 + v2) * nxx;
                &aux.data()[base..base + nxx]
            };
            let mut pooled = vec![0.0; nxx];
            for u in 0..nu {
                for (acc, p) in pooled.iter_mut().zip(slice(u)) {
                    *acc += p;
                }
            }
            let mass: f64 = pooled.iter().sum();
            if mass <= ZERO_PROB {
                continue;
            }
            for u in 0..nu {
                let row = slice(u);
                let mu: f64 = row.iter().sum();
                if mu <= ZERO_PROB {
                    continue;
                }
                let tv: f64 = 0.5
                    * row
                        .iter()
                        .zip(&pooled)
                        .map(|(a, b)| (a / mu - b / mass).abs())
                        .sum::<f64>();
                if tv > MARKOV_TOL {
                    return Err(DmcError::MarkovViolation(format!(
                        "p(x, x1 | u={u}, v1={v1}, v2={v2}) differs from p(x, x1 | v1, v2) \
                         by {tv:.3e} in total variation"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Evaluates the auxiliary outer bound at one joint `p(u, v1, v2, x, x1)`
/// (axes in that order). Outputs follow from the channel.
pub fn eval_theorem2_point(dmc: &DmcSpec, aux: &Table) -> Result<OuterPoint, DmcError> {
    require_one_sided(dmc)?;
    let s = aux.shape();
    if s.len() != 5 || s[3] != dmc.nx() || s[4] != dmc.nx1() {
        return Err(DmcError::Shape(format!(
            "auxiliary joint must be [U, V1, V2, {}, {}], got {s:?}",
            dmc.nx(),
            dmc.nx1()
        )));
    }
    validate_distribution(aux.data())?;
    check_markov(aux)?;
    let mut dims = s.to_vec();
    dims.extend([dmc.ny1(), dmc.ny2()]);
    let j = Joint::from_fn(dims, DEFAULT_CELL_CAP, |i| {
        aux.get(&i[..5]) * dmc.p(i[3], i[4], 0, i[5], i[6])
    })?;
    const U: usize = 0;
    const V1: usize = 1;
    const V2: usize = 2;
    const X1: usize = 4;
    const Y1: usize = 5;
    const Y2: usize = 6;
    Ok(OuterPoint {
        re1_tilde: j.cond_mutual_info(&[V1], &[Y1], &[U]) - j.cond_mutual_info(&[V1], &[Y2], &[U]),
        re2_tilde: j.cond_mutual_info(&[V2], &[Y2], &[U]) - j.cond_mutual_info(&[V2], &[Y1], &[U]),
        re1_bar: j.cond_mutual_info(&[V1], &[Y1], &[V2]) - j.cond_mutual_info(&[V1], &[Y2], &[V2]),
        re2_bar: j.cond_mutual_info(&[V2], &[Y2], &[V1]) - j.cond_mutual_info(&[V2], &[Y1], &[V1]),
        r1: j.cond_mutual_info(&[V1], &[Y1], &[X1]),
        r2: j.mutual_info(&[V2], &[Y2]),
    })
}

/// Joint over `(X, X1, Y1, Y2)` for an input given as a flat `[X, X1]` array.
fn input_joint(dmc: &DmcSpec, pxx1: &[f64]) -> Joint {
    let nx1 = dmc.nx1();
    let dims = vec![dmc.nx(), nx1, dmc.ny1(), dmc.ny2()];
    Joint::from_fn(dims, usize::MAX, |i| {
        pxx1[i[0] * nx1 + i[1]] * dmc.p(i[0], i[1], 0, i[2], i[3])
    })
    .expect("uncapped")
}

fn thm3_value(dmc: &DmcSpec, pxx1: &[f64]) -> f64 {
    input_joint(dmc, pxx1).cond_mutual_info(&[0], &[3], &[1, 2])
}

/// `I(X; Y2 | X1, Y1)` under the input `p(x, x1)`.
pub fn eval_theorem3(dmc: &DmcSpec, pxx1: &Table) -> Result<f64, DmcError> {
    require_one_sided(dmc)?;
    check_input(dmc, pxx1)?;
    Ok(thm3_value(dmc, pxx1.data()))
}

/// Result of the input-distribution search.
#[derive(Debug, Clone, PartialEq)]
pub struct Theorem3Max {
    /// Best value found; a lower bound on the true maximum.
    pub value: f64,
    /// `[X, X1]` input attaining `value`.
    pub argmax: Table,
}

pub fn maximize_theorem3(dmc: &DmcSpec, resolution: usize) -> Result<Theorem3Max, DmcError> {
    maximize_theorem3_seeded(dmc, resolution, &[])
}

fn grid_size(resolution: usize, k: usize) -> f64 {
    // C(resolution + k - 1, k - 1)
    (1..k).fold(1.0f64, |acc, i| acc * (resolution + i) as f64 / i as f64)
}

fn for_each_composition(rest: usize, pos: usize, c: &mut [usize], f: &mut impl FnMut(&[usize])) {
    if pos + 1 == c.len() {
        c[pos] = rest;
        f(c);
        return;
    }
    for v in 0..=rest {
        c[pos] = v;
        for_each_composition(rest - v, pos + 1, c, f);
    }
}

/// Grid search over the simplex of `p(x, x1)` with step `1/resolution`,
/// followed by pairwise mass-transfer refinement of the best grid point and
/// of every seed. Ties keep the lexicographically smallest grid point.
pub fn maximize_theorem3_seeded(
    dmc: &DmcSpec,
    resolution: usize,
    seeds: &[Table],
) -> Result<Theorem3Max, DmcError> {
    require_one_sided(dmc)?;
    if resolution == 0 {
        return Err(DmcError::Shape("grid resolution must be at least 1".into()));
    }
    for s in seeds {
        check_input(dmc, s)?;
    }
    let k = dmc.nx() * dmc.nx1();
    let points = grid_size(resolution, k);
    if points > MAX_GRID_POINTS as f64 {
        return Err(DmcError::GridTooLarge {
            points,
            limit: MAX_GRID_POINTS,
        });
    }
    let n = resolution as f64;

    let best_in_chunk = |first: usize| -> (f64, Vec<usize>) {
        let mut c = vec![0usize; k];
        c[0] = first;
        let mut best = (f64::NEG_INFINITY, Vec::new());
        let mut p = vec![0.0; k];
        let mut visit = |c: &[usize]| {
            for (pi, &ci) in p.iter_mut().zip(c) {
                *pi = ci as f64 / n;
            }
            let v = thm3_value(dmc, &p);
            if v > best.0 {
                best = (v, c.to_vec());
            }
        };
        if k == 1 {
            visit(&c);
        } else {
            for_each_composition(resolution - first, 1, &mut c, &mut visit);
        }
        best
    };
    let firsts: Vec<usize> = if k == 1 {
        vec![resolution]
    } else {
        (0..=resolution).collect()
    };
    let (_, grid_best) = firsts
        .into_par_iter()
        .map(best_in_chunk)
        .collect::<Vec<_>>()
        .into_iter()
        .fold((f64::NEG_INFINITY, Vec::new()), |acc, cand| {
            if cand.0 > acc.0 {
                cand
            } else {
                acc
            }
        });

    let start: Vec<f64> = grid_best.iter().map(|&c| c as f64 / n).collect();
    let starts = std::iter::once(start).chain(seeds.iter().map(|s| s.data().to_vec()));
    let (value, argmax) = starts.map(|p| refine(dmc, p, 1.0 / n)).fold(
        (f64::NEG_INFINITY, Vec::new()),
        |acc, cand| {
            if cand.0 > acc.0 {
                cand
            } else {
                acc
            }
        },
    );
    Ok(Theorem3Max {
        value,
        argmax: Table::new(vec![dmc.nx(), dmc.nx1()], argmax)?,
    })
}

/// Coordinate ascent over pairwise probability transfers with a step that
/// halves after every pass.
fn refine(dmc: &DmcSpec, mut p: Vec<f64>, step0: f64) -> (f64, Vec<f64>) {
    let k = p.len();
    let mut best = thm3_value(dmc, &p);
    let mut step = step0;
    for _ in 0..REFINE_PASSES {
        for _ in 0..MAX_SWEEPS_PER_PASS {
            let mut improved = false;
            for to in 0..k {
                for from in 0..k {
                    if to == from || p[from] <= 0.0 {
                        continue;
                    }
                    let d = step.min(p[from]);
                    let mut q = p.clone();
                    q[to] += d;
                    q[from] -= d;
                    let v = thm3_value(dmc, &q);
                    if v > best {
                        best = v;
                        p = q;
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        step *= 0.5;
    }
    (best, p)
}

/// Secrecy capacity expression for reverse-degraded channels at input
/// `p(x, x1)`: `I(X;Y2|X1) - I(X;Y1|X1)`, which equals `I(X;Y2|X1,Y1)` there.
pub fn secrecy_capacity_reverse_degraded(dmc: &DmcSpec, pxx1: &Table) -> Result<f64, DmcError> {
    require_one_sided(dmc)?;
    check_input(dmc, pxx1)?;
    if !dmc.is_reverse_degraded() {
        return Err(DmcError::NotReverseDegraded(
            "p(y1 | x, x1, y2) depends on x".into(),
        ));
    }
    let j = input_joint(dmc, pxx1.data());
    let difference = j.cond_mutual_info(&[0], &[3], &[1]) - j.cond_mutual_info(&[0], &[2], &[1]);
    let conditional = j.cond_mutual_info(&[0], &[3], &[1, 2]);
    if (difference - conditional).abs() > MARKOV_TOL {
        return Err(DmcError::NotReverseDegraded(format!(
            "the two capacity expressions differ by {:.3e}",
            (difference - conditional).abs()
        )));
    }
    Ok(difference)
}
