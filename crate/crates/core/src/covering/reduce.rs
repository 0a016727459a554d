use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::Serialize;

use super::family::{verify_family, BesicovitchFamily};
use crate::error::{invalid, Error, Result};
use crate::group::{reflect, relative, rotate_z, Point};
use crate::metrics::Ball;
use crate::regions::Region;

/// One step applied by [`reduce_family`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Transform {
    /// Left translation by `witness⁻¹`, radii reset to `d(0, p_j)`.
    Translate {
        witness: Point,
    },
    /// Centers on the vertical axis removed (input indices).
    DiscardAxial {
        indices: Vec<usize>,
    },
    /// Centers with `z > 0` reflected; the other half dropped.
    Reflect {
        dropped: Vec<usize>,
    },
    /// Centers with `z > 0` dropped without reflecting.
    DropUpper {
        dropped: Vec<usize>,
    },
    /// Centers outside the chosen sector dropped.
    Sector {
        dropped: Vec<usize>,
    },
    Rotate {
        angle: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reduction {
    /// `None` when every center was axial.
    pub family: Option<BesicovitchFamily>,
    pub log: Vec<Transform>,
    pub input_cardinality: usize,
    pub output_cardinality: usize,
    /// `2(π/θ + 1)·Card(output) + 2`.
    pub cardinality_bound: f64,
    pub bound_holds: bool,
}

/// Normalizes a valid family: witness at the origin, radii `d(0, p_j)`, all
/// centers with `z ≤ 0` inside `C(θ)`.
pub fn reduce_family(f: &BesicovitchFamily, theta: f64) -> Result<Reduction> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(invalid("theta", format!("must lie in (0, π/2), got {theta}")));
    }
    let check = verify_family(f, 0.0)?;
    if !check.pass {
        return Err(Error::InvalidFamily(format!(
            "exclusion margin {:?}, witness margin {}",
            check.margins.exclusion_margin, check.margins.witness_margin
        )));
    }
    let model = f.model();
    let w = f.witness();
    let mut log = Vec::new();

    let mut pts: Vec<(usize, Point)> = f
        .centers()
        .iter()
        .enumerate()
        .map(|(i, c)| (i, relative(&w, c)))
        .collect();
    let radii_match = f.balls().iter().zip(&pts).all(|(b, (_, p))| b.radius == model.norm(p));
    if w != Point::ORIGIN || !radii_match {
        log.push(Transform::Translate { witness: w });
    }

    let axial: Vec<usize> = pts
        .iter()
        .filter(|(_, p)| p.x == 0.0 && p.y == 0.0)
        .map(|(i, _)| *i)
        .collect();
    if !axial.is_empty() {
        pts.retain(|(_, p)| !(p.x == 0.0 && p.y == 0.0));
        log.push(Transform::DiscardAxial { indices: axial });
    }

    let n = f.len();
    if pts.is_empty() {
        return Ok(finish(None, log, n, 0, theta));
    }

    let low = pts.iter().filter(|(_, p)| p.z <= 0.0).count();
    let high = pts.iter().filter(|(_, p)| p.z >= 0.0).count();
    if high > low {
        let dropped = pts.iter().filter(|(_, p)| p.z < 0.0).map(|(i, _)| *i).collect();
        pts.retain(|(_, p)| p.z >= 0.0);
        for (_, p) in pts.iter_mut() {
            *p = reflect(p);
        }
        log.push(Transform::Reflect { dropped });
    } else if low < pts.len() {
        let dropped = pts.iter().filter(|(_, p)| p.z > 0.0).map(|(i, _)| *i).collect();
        pts.retain(|(_, p)| p.z <= 0.0);
        log.push(Transform::DropUpper { dropped });
    }

    let (keep, angle) = best_sector(&pts, theta);
    if keep.len() < pts.len() {
        let dropped = pts.iter().filter(|(i, _)| !keep.contains(i)).map(|(i, _)| *i).collect();
        log.push(Transform::Sector { dropped });
    }
    pts.retain(|(i, _)| keep.contains(i));
    if angle != 0.0 {
        for (_, p) in pts.iter_mut() {
            *p = rotate_z(angle, p);
        }
        log.push(Transform::Rotate { angle });
    }

    let balls = pts
        .iter()
        .map(|(_, p)| Ball::new(*p, model.norm(p), model))
        .collect::<Result<Vec<_>>>()?;
    let out = BesicovitchFamily::from_balls(balls, Point::ORIGIN)?;
    let cone = Region::c(theta)?;
    if !out.centers().iter().all(|p| p.z <= 0.0 && cone.contains(p)) {
        return Err(Error::InvalidFamily("rotated centers left the cone".into()));
    }
    let v = verify_family(&out, 0.0)?;
    if !v.pass {
        return Err(Error::InvalidFamily("reduced family failed verification".into()));
    }
    let k = out.len();
    Ok(finish(Some(out), log, n, k, theta))
}

fn finish(family: Option<BesicovitchFamily>, log: Vec<Transform>, n: usize, k: usize, theta: f64) -> Reduction {
    let bound = 2.0 * (PI / theta + 1.0) * k as f64 + 2.0;
    Reduction {
        family,
        log,
        input_cardinality: n,
        output_cardinality: k,
        cardinality_bound: bound,
        bound_holds: n as f64 <= bound,
    }
}

/// Largest set of points whose horizontal angles fit strictly inside an open
/// sector of width `2θ`, and the rotation that centers the sector on the
/// positive x-axis. Keeps the current orientation when it is already optimal.
fn best_sector(pts: &[(usize, Point)], theta: f64) -> (Vec<usize>, f64) {
    let cone = Region::C { theta };
    let current: Vec<usize> = pts.iter().filter(|(_, p)| cone.contains(p)).map(|(i, _)| *i).collect();

    let width = 2.0 * theta * (1.0 - 1e-12);
    let mut ang: Vec<(f64, usize)> = pts.iter().map(|(i, p)| (p.y.atan2(p.x), *i)).collect();
    ang.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let m = ang.len();
    let mut best: (usize, usize) = (0, 0);
    let mut best_len = 0;
    let mut end = 0;
    for start in 0..m {
        if end < start {
            end = start;
        }
        while end + 1 < start + m && {
            let (a, _) = ang[(end + 1) % m];
            let span = a - ang[start].0 + if end + 1 >= m { TAU } else { 0.0 };
            span < width
        } {
            end += 1;
        }
        if end - start + 1 > best_len {
            best_len = end - start + 1;
            best = (start, end);
        }
    }
    if current.len() >= best_len {
        return (current, 0.0);
    }
    let (s, e) = best;
    let first = ang[s].0;
    let last = ang[e % m].0 + if e >= m { TAU } else { 0.0 };
    let mid = 0.5 * (first + last);
    let keep = (s..=e).map(|k| ang[k % m].1).collect();
    (keep, -mid)
}
