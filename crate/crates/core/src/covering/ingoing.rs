use serde::Serialize;

use super::family::BesicovitchFamily;
use crate::error::{invalid, Error, Result};
use crate::group::{dilate_unchecked, Point};
use crate::metrics::{Ball, DistanceModel};

/// Horizontal angles `φ_n` of the unit-sphere points `q_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "schedule", rename_all = "snake_case")]
pub enum AngleSchedule {
    /// `q_n = (λ, λε_n, z)` with `ε_n = ε₀·2⁻ⁿ`.
    EpsilonHalving { eps0: f64 },
    /// `φ_n = −n·ω`.
    Rotating { omega: f64 },
}

impl AngleSchedule {
    fn angle(&self, n: usize) -> f64 {
        match *self {
            AngleSchedule::EpsilonHalving { eps0 } => (eps0 * 0.5f64.powi(n as i32)).atan(),
            AngleSchedule::Rotating { omega } => -(n as f64) * omega,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IngoingParams {
    /// Horizontal radius `ρ(q_n)`.
    pub rho: f64,
    pub schedule: AngleSchedule,
    /// Required excess in `d(q_k, δ_λ q_n) ≥ 1 + δ_safe·λ`, `λ = r_n/r_k`,
    /// that is `d(p_k, p_n) ≥ r_k + δ_safe·r_n`.
    pub delta_safe: f64,
    pub max_halvings: usize,
}

impl IngoingParams {
    pub fn default_for(model: &DistanceModel) -> Self {
        let (rho, omega) = match model {
            DistanceModel::Box => (1.0, 3.205),
            _ => (0.3, 0.3),
        };
        IngoingParams {
            rho,
            schedule: AngleSchedule::Rotating { omega },
            delta_safe: 1e-6,
            max_halvings: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IngoingFamily {
    pub family: BesicovitchFamily,
    /// Unit-sphere points `q_n`; centers are `δ_{r_n}(q_n)`.
    pub directions: Vec<Point>,
    pub radii: Vec<f64>,
    /// Halvings used at each step.
    pub halvings: Vec<usize>,
}

/// Point of the unit sphere with horizontal radius `rho` and angle `phi`,
/// taken on the lower face (Box) or the lower sheet (Gauge).
fn sphere_point(model: &DistanceModel, rho: f64, phi: f64) -> Result<Point> {
    let z = match *model {
        DistanceModel::Box => -0.25,
        DistanceModel::Gauge { alpha } => -(1.0 - rho.powi(4)).sqrt() / (2.0 * alpha),
        _ => return Err(invalid("model", "ingoing construction needs box or gauge")),
    };
    Ok(Point::new(rho * phi.cos(), rho * phi.sin(), z))
}

/// Family of `n` balls through the origin, each center outside every other
/// ball, built along a sphere region where the horizontal directions point
/// out of the translated balls.
pub fn ingoing_corner_family(model: DistanceModel, n: usize, params: &IngoingParams) -> Result<IngoingFamily> {
    if n < 2 {
        return Err(invalid("N", "need N ≥ 2"));
    }
    let upper = if matches!(model, DistanceModel::Box) {
        1.0
    } else {
        1.0 - 1e-12
    };
    if !(params.rho > 0.0 && params.rho <= upper) {
        return Err(invalid("rho", format!("must lie in (0, {upper}]")));
    }
    if !(params.delta_safe >= 0.0) {
        return Err(invalid("delta_safe", "must be non-negative"));
    }
    let mut q = Vec::with_capacity(n);
    let mut r: Vec<f64> = Vec::with_capacity(n);
    let mut halvings = Vec::with_capacity(n);
    for k in 0..n {
        let qn = sphere_point(&model, params.rho, params.schedule.angle(k))?;
        if k == 0 {
            q.push(qn);
            r.push(1.0);
            halvings.push(0);
            continue;
        }
        let mut s = r[k - 1];
        let mut trace = Vec::new();
        let mut found = None;
        for h in 0..=params.max_halvings {
            let worst = (0..k)
                .map(|j| {
                    let lambda = s / r[j];
                    (model.distance(&q[j], &dilate_unchecked(lambda, &qn)) - 1.0) / lambda
                })
                .fold(f64::INFINITY, f64::min);
            if worst >= params.delta_safe {
                found = Some(h);
                break;
            }
            if trace.len() < 8 {
                trace.push(format!("s={s:e} worst={worst:e}"));
            }
            s *= 0.5;
            if s == 0.0 {
                break;
            }
        }
        let Some(h) = found else {
            return Err(Error::Construction {
                step: k,
                reason: format!("line search exhausted: {}", trace.join("; ")),
            });
        };
        q.push(qn);
        r.push(s);
        halvings.push(h);
    }
    let balls = q
        .iter()
        .zip(&r)
        .map(|(qn, &s)| {
            let p = dilate_unchecked(s, qn);
            Ball::new(p, model.norm(&p), model)
        })
        .collect::<Result<Vec<_>>>()?;
    let family = BesicovitchFamily::from_balls(balls, Point::ORIGIN)?;
    Ok(IngoingFamily {
        family,
        directions: q,
        radii: r,
        halvings,
    })
}
