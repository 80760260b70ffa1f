use std::cmp::Ordering;

use super::FrontierPoint;

/// Gains at or below this do not make a point nondominated.
pub const DOMINANCE_EPS: f64 = 1e-9;

fn key_order(a: &FrontierPoint, b: &FrontierPoint) -> Ordering {
    a.params
        .key()
        .iter()
        .zip(b.params.key().iter())
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Nondominated subset, sorted by `re1` ascending.
///
/// Points are scanned by `re1` descending (ties: larger `re2`, then smaller
/// parameter tuple); a point survives when its `re2` beats every point before
/// it by more than [`DOMINANCE_EPS`].
pub fn pareto_filter(mut points: Vec<FrontierPoint>) -> Vec<FrontierPoint> {
    points.sort_by(|a, b| {
        b.re1
            .total_cmp(&a.re1)
            .then(b.re2.total_cmp(&a.re2))
            .then_with(|| key_order(a, b))
    });
    let mut best = f64::NEG_INFINITY;
    let mut kept = Vec::new();
    for p in points {
        if p.re2 > best + DOMINANCE_EPS {
            best = p.re2;
            kept.push(p);
        }
    }
    kept.reverse();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontier::RelayPower;
    use crate::gaussian::SchemeParams;

    fn pt(re1: f64, re2: f64) -> FrontierPoint {
        FrontierPoint {
            power: RelayPower::Single(1.0),
            params: SchemeParams::Prop1 {
                alpha: re1,
                nc: 0.0,
            },
            re1,
            re2,
        }
    }

    #[test]
    fn drops_dominated_points() {
        let out = pareto_filter(vec![pt(0.1, 0.2), pt(0.1, 0.3), pt(0.2, 0.1)]);
        let pairs: Vec<(f64, f64)> = out.iter().map(|p| (p.re1, p.re2)).collect();
        assert_eq!(pairs, vec![(0.1, 0.3), (0.2, 0.1)]);
    }

    #[test]
    fn single_and_empty() {
        assert_eq!(pareto_filter(vec![pt(0.5, 0.5)]), vec![pt(0.5, 0.5)]);
        assert!(pareto_filter(Vec::new()).is_empty());
    }

    #[test]
    fn near_ties_collapse() {
        let out = pareto_filter(vec![pt(0.3, 0.1), pt(0.2, 0.1 + 1e-12)]);
        assert_eq!(out, vec![pt(0.3, 0.1)]);
    }
}
