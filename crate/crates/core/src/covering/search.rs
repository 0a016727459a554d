use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::family::{verify_family, BesicovitchFamily};
use crate::error::{invalid, Result};
use crate::group::{dilate_unchecked, Point};
use crate::metrics::{Ball, DistanceModel};
use crate::sampling::{derive_seed, rng, unit_vector, SeededRng};

/// Proposals per independent trial.
pub const TRIAL_BUDGET: u64 = 5000;
const ACCEPT_FACTOR: f64 = 1.0 + 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub family: BesicovitchFamily,
    pub cardinality: usize,
    pub trials: usize,
    /// Derived seed of the winning trial.
    pub trial_seed: u64,
}

fn propose(model: &DistanceModel, scale: f64, r: &mut SeededRng) -> Option<Point> {
    let u = unit_vector(r);
    let n = model.norm(&u);
    if !(n > 0.0) {
        return None;
    }
    let s = scale * r.gen_range(0.5..=1.0);
    Some(dilate_unchecked(s / n, &u))
}

/// Greedy growth with single-conflict swaps; every ball passes through the
/// origin.
fn trial(model: &DistanceModel, scale: f64, budget: u64, seed: u64) -> Vec<(Point, f64)> {
    let mut r = rng(seed);
    let mut balls: Vec<(Point, f64)> = Vec::new();
    for _ in 0..budget {
        let Some(c) = propose(model, scale, &mut r) else {
            continue;
        };
        let rc = model.norm(&c);
        let mut conflicts = balls
            .iter()
            .enumerate()
            .filter(|(_, (ci, ri))| !(model.distance(&c, ci) >= rc.max(*ri) * ACCEPT_FACTOR))
            .map(|(i, _)| i);
        match (conflicts.next(), conflicts.next()) {
            (None, _) => balls.push((c, rc)),
            (Some(i), None) if r.gen_bool(0.5) => {
                balls[i] = (c, rc);
            }
            _ => {}
        }
    }
    balls
}

fn split(budget: u64) -> Vec<u64> {
    let t = budget.div_ceil(TRIAL_BUDGET).max(1);
    (0..t).map(|i| budget / t + u64::from(i < budget % t)).collect()
}

/// Largest Besicovitch family through the origin found by independent
/// randomized trials. Centers lie at distance in `[scale/2, scale]` from the
/// origin. Ties between trials go to the smaller trial seed.
pub fn search_max_family(model: DistanceModel, scale: f64, budget: u64, seed: u64) -> Result<SearchResult> {
    if budget == 0 {
        return Err(invalid("budget", "must be at least 1"));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(invalid("scale", "must be positive"));
    }
    let shares = split(budget);
    let results: Vec<(u64, Vec<(Point, f64)>)> = shares
        .par_iter()
        .enumerate()
        .map(|(i, &b)| {
            let s = derive_seed(seed, i as u64);
            (s, trial(&model, scale, b, s))
        })
        .collect();
    let mut best: Option<(u64, BesicovitchFamily)> = None;
    for (s, balls) in results {
        if balls.is_empty() {
            continue;
        }
        let bs = balls
            .iter()
            .map(|&(c, r)| Ball::new(c, r, model))
            .collect::<Result<Vec<_>>>()?;
        let f = BesicovitchFamily::from_balls(bs, Point::ORIGIN)?;
        if !verify_family(&f, 0.0)?.pass {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bs, bf)) => f.len() > bf.len() || (f.len() == bf.len() && s < *bs),
        };
        if better {
            best = Some((s, f));
        }
    }
    let (trial_seed, family) = match best {
        Some(b) => b,
        None => {
            let c = Point::new(scale, 0.0, 0.0);
            let c = dilate_unchecked(scale / model.norm(&c), &c);
            let f = BesicovitchFamily::through_witness(model, &[c], Point::ORIGIN)?;
            (seed, f)
        }
    };
    Ok(SearchResult {
        cardinality: family.len(),
        family,
        trials: shares.len(),
        trial_seed,
    })
}
