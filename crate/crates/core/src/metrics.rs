//! Homogeneous distances on H¹, closed balls and the polynomial membership
//! criterion for the Euclidean-ball distance `d_α`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::group::{dilate_unchecked, relative, Point};

/// Selects one homogeneous distance (or pseudo-distance) with its parameters.
///
/// JSON form: `{"model":"ball_norm","alpha":2.0}`, `{"model":"box"}`, ...
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawModel", into = "RawModel")]
pub enum DistanceModel {
    /// `d_α`: unit ball is the Euclidean ball of radius α.
    BallNorm { alpha: f64 },
    /// Cygan-Korányi gauge `(ρ⁴ + 4α²z²)^{1/4}`.
    Gauge { alpha: f64 },
    /// `max(ρ, 2|z|^{1/2})`.
    Box,
    /// `κρ + (ρ⁴ + 4α²z²)^{1/4}`.
    KappaGauge { kappa: f64, alpha: f64 },
    /// `ρ(p⁻¹q)`, a pseudo-distance.
    RhoPseudo,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
enum RawModel {
    BallNorm { alpha: f64 },
    Gauge { alpha: f64 },
    Box,
    KappaGauge { kappa: f64, alpha: f64 },
    Rho,
}

impl TryFrom<RawModel> for DistanceModel {
    type Error = Error;

    fn try_from(raw: RawModel) -> Result<Self> {
        match raw {
            RawModel::BallNorm { alpha } => DistanceModel::ball_norm(alpha),
            RawModel::Gauge { alpha } => DistanceModel::gauge(alpha),
            RawModel::Box => Ok(DistanceModel::Box),
            RawModel::KappaGauge { kappa, alpha } => DistanceModel::kappa_gauge(kappa, alpha),
            RawModel::Rho => Ok(DistanceModel::RhoPseudo),
        }
    }
}

impl From<DistanceModel> for RawModel {
    fn from(m: DistanceModel) -> Self {
        match m {
            DistanceModel::BallNorm { alpha } => RawModel::BallNorm { alpha },
            DistanceModel::Gauge { alpha } => RawModel::Gauge { alpha },
            DistanceModel::Box => RawModel::Box,
            DistanceModel::KappaGauge { kappa, alpha } => RawModel::KappaGauge { kappa, alpha },
            DistanceModel::RhoPseudo => RawModel::Rho,
        }
    }
}

fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("must be positive and finite, got {v}")))
    }
}

impl DistanceModel {
    pub fn ball_norm(alpha: f64) -> Result<Self> {
        check_positive("alpha", alpha)?;
        Ok(DistanceModel::BallNorm { alpha })
    }

    pub fn gauge(alpha: f64) -> Result<Self> {
        check_positive("alpha", alpha)?;
        Ok(DistanceModel::Gauge { alpha })
    }

    pub fn kappa_gauge(kappa: f64, alpha: f64) -> Result<Self> {
        check_positive("kappa", kappa)?;
        check_positive("alpha", alpha)?;
        Ok(DistanceModel::KappaGauge { kappa, alpha })
    }

    pub fn name(&self) -> &'static str {
        match self {
            DistanceModel::BallNorm { .. } => "ball_norm",
            DistanceModel::Gauge { .. } => "gauge",
            DistanceModel::Box => "box",
            DistanceModel::KappaGauge { .. } => "kappa_gauge",
            DistanceModel::RhoPseudo => "rho",
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match *self {
            DistanceModel::BallNorm { alpha }
            | DistanceModel::Gauge { alpha }
            | DistanceModel::KappaGauge { alpha, .. } => Some(alpha),
            _ => None,
        }
    }

    /// True when the triangle inequality is a known theorem for these parameters.
    pub fn is_proven_metric(&self) -> bool {
        match *self {
            DistanceModel::BallNorm { alpha } | DistanceModel::Gauge { alpha } => alpha <= 2.0,
            DistanceModel::Box => true,
            DistanceModel::KappaGauge { kappa, alpha } => kappa <= 1.0 && alpha <= 2.0,
            DistanceModel::RhoPseudo => false,
        }
    }

    pub fn is_pseudo(&self) -> bool {
        matches!(self, DistanceModel::RhoPseudo)
    }

    /// Homogeneous norm `d(0, u)`.
    pub fn norm(&self, u: &Point) -> f64 {
        let rho = u.rho();
        match *self {
            DistanceModel::BallNorm { alpha } => {
                let g2 = gauge_sq(rho, u.z, alpha);
                ((rho * rho + g2) / (2.0 * alpha * alpha)).sqrt()
            }
            DistanceModel::Gauge { alpha } => gauge_sq(rho, u.z, alpha).sqrt(),
            DistanceModel::Box => rho.max(2.0 * u.z.abs().sqrt()),
            DistanceModel::KappaGauge { kappa, alpha } => kappa * rho + gauge_sq(rho, u.z, alpha).sqrt(),
            DistanceModel::RhoPseudo => rho,
        }
    }

    pub fn distance(&self, p: &Point, q: &Point) -> f64 {
        self.norm(&relative(p, q))
    }

    /// Defining predicate of the closed unit ball at the origin, written
    /// without the closed-form norm where one exists.
    pub fn unit_ball_contains(&self, u: &Point) -> bool {
        let r2 = u.x * u.x + u.y * u.y;
        match *self {
            DistanceModel::BallNorm { alpha } => r2 + u.z * u.z <= alpha * alpha,
            DistanceModel::Gauge { alpha } => r2 * r2 + 4.0 * alpha * alpha * u.z * u.z <= 1.0,
            DistanceModel::Box => r2 <= 1.0 && 4.0 * u.z.abs() <= 1.0,
            DistanceModel::KappaGauge { kappa, alpha } => {
                let rest = 1.0 - kappa * r2.sqrt();
                rest >= 0.0 && r2 * r2 + 4.0 * alpha * alpha * u.z * u.z <= rest.powi(4)
            }
            DistanceModel::RhoPseudo => r2 <= 1.0,
        }
    }
}

/// `‖u‖²_{g,α} = √(ρ⁴ + 4α²z²)`, evaluated without overflow of the fourth power.
fn gauge_sq(rho: f64, z: f64, alpha: f64) -> f64 {
    (rho * rho).hypot(2.0 * alpha * z)
}

/// Closed ball `B(center, radius)` under `model`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
    pub model: DistanceModel,
}

/// Position of a point relative to a ball, up to a tolerance band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

impl Ball {
    pub fn new(center: Point, radius: f64, model: DistanceModel) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::NonFinitePoint(center.x, center.y, center.z));
        }
        check_positive("radius", radius)?;
        Ok(Ball { center, radius, model })
    }

    /// Slack of the defining inequality; `≥ 0` means `q` is in the closed ball.
    ///
    /// For `BallNorm` this is `α² − (ρ²/r² + z²/r⁴)` evaluated on `center⁻¹q`.
    /// For every other model it is `radius − d(center, q)`.
    pub fn slack(&self, q: &Point) -> f64 {
        match self.model {
            DistanceModel::BallNorm { alpha } => {
                let u = relative(&self.center, q);
                let r2 = self.radius * self.radius;
                alpha * alpha - ((u.x * u.x + u.y * u.y) / r2 + (u.z / r2) * (u.z / r2))
            }
            m => self.radius - m.distance(&self.center, q),
        }
    }

    /// `margin = 0` is closed-ball membership; larger margins demand strict slack.
    pub fn contains(&self, q: &Point, margin: f64) -> bool {
        self.slack(q) >= margin
    }

    pub fn classify(&self, q: &Point, band: f64) -> Membership {
        let s = self.slack(q);
        if s.abs() < band {
            Membership::Boundary
        } else if s > 0.0 {
            Membership::Inside
        } else {
            Membership::Outside
        }
    }
}

pub fn distance(m: &DistanceModel, p: &Point, q: &Point) -> f64 {
    m.distance(p, q)
}

pub fn ball_contains(b: &Ball, q: &Point, margin: f64) -> bool {
    b.contains(q, margin)
}

/// `r_p = d_α(0, p)`.
pub fn r_of(alpha: f64, p: &Point) -> f64 {
    DistanceModel::BallNorm { alpha }.norm(p)
}

/// `A_p(q)`; non-positive exactly when `q ∈ B(p, r_p)`.
pub fn a_poly(alpha: f64, p: &Point, q: &Point) -> Result<f64> {
    check_positive("alpha", alpha)?;
    if p.x == 0.0 && p.y == 0.0 && p.z == 0.0 {
        return Err(Error::ZeroPoint(p.to_array()));
    }
    let r = r_of(alpha, p);
    let r2 = r * r;
    let w = 0.5 * (p.x * q.y - q.x * p.y);
    let zw = q.z - w;
    Ok(r2 * (q.x * q.x + q.y * q.y - 2.0 * q.x * p.x - 2.0 * q.y * p.y) + zw * zw - 2.0 * p.z * zw)
}

/// Infimum of `{r > 0 : δ_{1/r}(p⁻¹q) ∈ unit ball}` by bisection on the
/// membership predicate alone.
pub fn distance_by_bisection(m: &DistanceModel, p: &Point, q: &Point, tol: f64) -> Result<f64> {
    check_positive("tol", tol)?;
    let u = relative(p, q);
    if u.x == 0.0 && u.y == 0.0 && u.z == 0.0 {
        return Err(invalid("q", "must differ from p"));
    }
    let inside = |r: f64| m.unit_ball_contains(&dilate_unchecked(1.0 / r, &u));

    let (mut lo, mut hi);
    if inside(1.0) {
        hi = 1.0;
        lo = 0.5;
        let mut k = 0;
        while inside(lo) {
            hi = lo;
            lo *= 0.5;
            k += 1;
            if k > 60 {
                return Err(Error::NoBracket);
            }
        }
    } else {
        lo = 1.0;
        hi = 2.0;
        let mut k = 0;
        while !inside(hi) {
            lo = hi;
            hi *= 2.0;
            k += 1;
            if k > 60 {
                return Err(Error::NoBracket);
            }
        }
    }
    for _ in 0..400 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Constants attached to `d_α` in the covering argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedConstants {
    pub alpha: f64,
    /// Lower constant in `c1·x_p ≤ r_p`.
    pub c1: f64,
    /// Upper constant in `r_p ≤ c2·x_p`.
    pub c2: f64,
    /// Half-aperture below which quadrilaterals fit inside `B(p, r_p)`.
    pub theta2: f64,
}

impl DerivedConstants {
    /// Coefficient `C(b)` in `r_p² ≤ C(b)·|z_p|` on `T(a, b)`.
    pub fn tt_coeff(&self, b: f64) -> f64 {
        let a2 = self.alpha * self.alpha;
        (b * b + (b.powi(4) + 4.0 * a2).sqrt()) / (2.0 * a2)
    }

    /// `1 − (1 + α²/4)tan²θ − α tanθ`; vanishes at `theta2`.
    pub fn sev1_residual(&self, theta: f64) -> f64 {
        let t = theta.tan();
        1.0 - (1.0 + self.alpha * self.alpha / 4.0) * t * t - self.alpha * t
    }
}

pub fn derived_constants(alpha: f64) -> Result<DerivedConstants> {
    check_positive("alpha", alpha)?;
    let a2 = alpha * alpha;
    let c1 = 1.0 / (alpha * std::f64::consts::SQRT_2);
    let c2 = ((2.0 + (4.0 + 4.0 * a2).sqrt()) / (2.0 * a2)).sqrt();
    // Positive root of (1 + α²/4)t² + αt − 1, in the cancellation-free form.
    let t = 2.0 / (alpha + (2.0 * a2 + 4.0).sqrt());
    Ok(DerivedConstants {
        alpha,
        c1,
        c2,
        theta2: t.atan(),
    })
}
