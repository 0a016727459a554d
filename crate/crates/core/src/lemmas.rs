//! Sampled checks of the geometric lemmas, inclusion tests and the
//! threshold sweeps that turn "large enough" constants into numbers.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use rand::Rng;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::group::{dilate_unchecked, Point};
use crate::metrics::{derived_constants, r_of, Ball, DistanceModel};
use crate::regions::{quad_vertices, Region};
use crate::report::{run_sampled, Report, Worst};
use crate::sampling::{log_uniform, unit_vector, SeededRng};

/// Tolerated negative slack on sampled inclusions.
pub const INCLUSION_TOL: f64 = -1e-9;

/// Source of points for [`verify_inclusion`].
#[derive(Debug, Clone, PartialEq)]
pub enum Inner {
    /// A region, truncated at `extent` in unbounded directions.
    Region { region: Region, extent: f64 },
    /// A fixed list of points.
    Points(Vec<Point>),
}

/// Checks `inner ⊂ ball`. Quadrilaterals are decided exactly from their four
/// vertices, since `BallNorm` balls are Euclidean convex; everything else is
/// sampled.
pub fn verify_inclusion(inner: &Inner, ball: &Ball, samples: usize, margin: f64, seed: u64) -> Result<Report> {
    let rep = Report::new("inclusion", seed).param("radius", ball.radius);
    let slack_of = |q: &Point| ball.slack(q);
    match inner {
        Inner::Points(pts) => {
            if pts.is_empty() {
                return Err(Error::EmptyRegion("no points".into()));
            }
            let mut w = Worst::default();
            for q in pts {
                w.push(slack_of(q), || vec![*q]);
            }
            Ok(rep.with_worst(pts.len(), w, margin))
        }
        Inner::Region { region, extent } => {
            if let (Region::Quad { z, axis, theta }, DistanceModel::BallNorm { .. }) = (region, ball.model) {
                let v = quad_vertices(&Point::new(axis.0, axis.1, 0.0), *z, *theta)?;
                let mut w = Worst::default();
                for q in v {
                    w.push(slack_of(&q), || vec![q]);
                }
                let mut r = rep.with_worst(4, w, margin);
                r.detail = Some("exact: quadrilateral vertices".into());
                return Ok(r);
            }
            if samples == 0 {
                return Err(invalid("samples", "must be at least 1"));
            }
            // Fail early on regions that cannot be sampled.
            region.sample(&mut crate::sampling::rng(seed), *extent)?;
            let w = run_sampled(samples, seed, |r| {
                let q = region.sample(r, *extent).ok()?;
                Some((slack_of(&q), vec![q]))
            });
            Ok(rep.with_worst(samples, w, margin))
        }
    }
}

fn check_alpha(alpha: f64) -> Result<DistanceModel> {
    DistanceModel::ball_norm(alpha)
}

/// Ball `B(p, r_p)` for the Euclidean-ball distance.
pub fn ball_rp(alpha: f64, p: &Point) -> Result<Ball> {
    Ball::new(*p, r_of(alpha, p), DistanceModel::ball_norm(alpha)?).map_err(|_| Error::ZeroPoint(p.to_array()))
}

fn sample_p<R: Rng + ?Sized>(r: &mut R, a: f64, b: f64, theta: f64) -> Point {
    let x = log_uniform(r, a, a * 1e3);
    let w = x * theta.tan();
    Point::new(x, r.gen_range(-w..w), r.gen_range(-b..b))
}

fn sample_t<R: Rng + ?Sized>(r: &mut R, a: f64, b: f64) -> Point {
    let z = -log_uniform(r, a, a * 1e3);
    let rad = b * r.gen::<f64>().sqrt();
    let phi = r.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Point::new(rad * phi.cos(), rad * phi.sin(), z)
}

/// `c1·x_p ≤ r_p ≤ c2·x_p` on `P(a, b, θ)` with `θ < π/4`, `a² ≥ b`.
pub fn verify_pp(alpha: f64, a: f64, b: f64, theta: f64, samples: usize, seed: u64) -> Result<Report> {
    let region = Region::p(a, b, theta)?;
    if theta >= FRAC_PI_4 || a * a < b {
        return Err(invalid("theta/a", "need θ < π/4 and a² ≥ b"));
    }
    let k = derived_constants(alpha)?;
    let w = run_sampled(samples, seed, |r| {
        let p = sample_p(r, a, b, theta);
        if !region.contains(&p) {
            return None;
        }
        let rp = r_of(alpha, &p);
        let s = ((rp - k.c1 * p.x).min(k.c2 * p.x - rp)) / p.x;
        Some((s, vec![p]))
    });
    Ok(Report::new("pp", seed)
        .param("alpha", alpha)
        .param("a", a)
        .param("b", b)
        .param("theta", theta)
        .with_worst(samples, w, INCLUSION_TOL))
}

/// `r_p² ≤ C(b)|z_p|` on `T(a, b)` with `a ≥ 1`.
pub fn verify_tt(alpha: f64, a: f64, b: f64, samples: usize, seed: u64) -> Result<Report> {
    let region = Region::t(a, b)?;
    if a < 1.0 {
        return Err(invalid("a", "need a ≥ 1"));
    }
    let k = derived_constants(alpha)?;
    let c = k.tt_coeff(b);
    let w = run_sampled(samples, seed, |r| {
        let p = sample_t(r, a, b);
        if !region.contains(&p) {
            return None;
        }
        let rp = r_of(alpha, &p);
        let bound = c * p.z.abs();
        Some(((bound - rp * rp) / bound, vec![p]))
    });
    Ok(Report::new("tt", seed)
        .param("alpha", alpha)
        .param("a", a)
        .param("b", b)
        .with_worst(samples, w, INCLUSION_TOL))
}

/// `Q(z, π(p), θ) ⊂ B(p, r_p)` for random `p` and `|z − z_p| ≤ |z_p|`,
/// decided on the four vertices.
pub fn verify_sev1(alpha: f64, theta: f64, samples: usize, seed: u64) -> Result<Report> {
    check_alpha(alpha)?;
    Region::quad(0.0, (1.0, 0.0), theta)?;
    let w = run_sampled(samples, seed, |r| {
        let u = unit_vector(r);
        let p = dilate_unchecked(log_uniform(r, 1e-3, 1e3), &u);
        let z = p.z + r.gen_range(-1.0..=1.0) * p.z.abs();
        let ball = ball_rp(alpha, &p).ok()?;
        let v = quad_vertices(&p, z, theta).ok()?;
        let (mut s, mut at) = (f64::INFINITY, v[0]);
        for q in v {
            let t = ball.slack(&q);
            if t < s || t.is_nan() {
                s = t;
                at = q;
            }
        }
        Some((s, vec![p, at]))
    });
    Ok(Report::new("sev1", seed)
        .param("alpha", alpha)
        .param("theta", theta)
        .with_worst(samples, w, INCLUSION_TOL))
}

/// `R(t, b, θ) ⊂ B(p, r_p)` for `p ∈ P(a, b, θ)` and `t ∈ [1, x_p]`.
pub fn verify_x_axis(alpha: f64, theta: f64, a: f64, b: f64, samples: usize, seed: u64) -> Result<Report> {
    check_alpha(alpha)?;
    let region = Region::p(a, b, theta)?;
    let w = run_sampled(samples, seed, |r| {
        let p = sample_p(r, a, b, theta);
        if !region.contains(&p) {
            return None;
        }
        let t = r.gen_range(1.0..=p.x);
        let q = Region::r(t, b, theta).ok()?.sample(r, 0.0).ok()?;
        Some((ball_rp(alpha, &p).ok()?.slack(&q), vec![p, q]))
    });
    Ok(Report::new("x_axis", seed)
        .param("alpha", alpha)
        .param("theta", theta)
        .param("a", a)
        .param("b", b)
        .with_worst(samples, w, INCLUSION_TOL))
}

/// `D(t, b) ⊂ B(p, r_p)` for `p ∈ T(a, b)` and `t ∈ [z_p, −1]`.
pub fn verify_z_axis(alpha: f64, a: f64, b: f64, samples: usize, seed: u64) -> Result<Report> {
    check_alpha(alpha)?;
    let region = Region::t(a, b)?;
    if a < 1.0 {
        return Err(invalid("a", "need a ≥ 1"));
    }
    let w = run_sampled(samples, seed, |r| {
        let p = sample_t(r, a, b);
        if !region.contains(&p) {
            return None;
        }
        let t = r.gen_range(p.z..=-1.0);
        let q = Region::d(t, b).ok()?.sample(r, 0.0).ok()?;
        Some((ball_rp(alpha, &p).ok()?.slack(&q), vec![p, q]))
    });
    Ok(Report::new("z_axis", seed)
        .param("alpha", alpha)
        .param("a", a)
        .param("b", b)
        .with_worst(samples, w, INCLUSION_TOL))
}

/// Mutual non-containment slack: `≥ 0` when one of the two balls
/// `B(p, r_p)`, `B(q, r_q)` contains the other center.
fn containment_slack(alpha: f64, p: &Point, q: &Point) -> Option<f64> {
    let bp = ball_rp(alpha, p).ok()?;
    let bq = ball_rp(alpha, q).ok()?;
    Some(bp.slack(q).max(bq.slack(p)))
}

/// No two mutually non-containing points inside `P(a, b, θ)`.
pub fn verify_x_axis0(alpha: f64, theta: f64, a: f64, b: f64, samples: usize, seed: u64) -> Result<Report> {
    check_alpha(alpha)?;
    let region = Region::p(a, b, theta)?;
    let w = run_sampled(samples, seed, |r| {
        let p = sample_p(r, a, b, theta);
        let q = sample_p(r, a, b, theta);
        if !(region.contains(&p) && region.contains(&q)) {
            return None;
        }
        Some((containment_slack(alpha, &p, &q)?, vec![p, q]))
    });
    Ok(Report::new("x_axis0", seed)
        .param("alpha", alpha)
        .param("theta", theta)
        .param("a", a)
        .param("b", b)
        .with_worst(samples, w, INCLUSION_TOL))
}

/// No two mutually non-containing points inside `T(a, b)`.
pub fn verify_z_axis0(alpha: f64, a: f64, b: f64, samples: usize, seed: u64) -> Result<Report> {
    check_alpha(alpha)?;
    let region = Region::t(a, b)?;
    let w = run_sampled(samples, seed, |r| {
        let p = sample_t(r, a, b);
        let q = sample_t(r, a, b);
        if !(region.contains(&p) && region.contains(&q)) {
            return None;
        }
        Some((containment_slack(alpha, &p, &q)?, vec![p, q]))
    });
    Ok(Report::new("z_axis0", seed)
        .param("alpha", alpha)
        .param("a", a)
        .param("b", b)
        .with_worst(samples, w, INCLUSION_TOL))
}

/// Result of one comparison check.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Comparison {
    NotApplicable {
        reason: String,
    },
    Checked {
        /// `(2z_p − z_q)/max(|z_p|, |z_q|)`, must be positive.
        z_slack: f64,
        /// `(ρ_p cos2θ − ρ_q)/ρ_p`, must be positive.
        rho_slack: f64,
        pass: bool,
    },
}

/// Margin used on the non-containment hypotheses.
pub const HYPOTHESIS_MARGIN: f64 = 1e-9;

/// Checks `z_q < 2z_p` and `ρ_q < ρ_p cos2θ` for a pair satisfying the
/// hypotheses (both below the plane, `ρ_q ≤ ρ_p`, both in `C(θ)`, neither
/// ball `B(·, r_·)` containing the other center).
pub fn verify_comparison(alpha: f64, theta: f64, p: &Point, q: &Point) -> Result<Comparison> {
    check_alpha(alpha)?;
    let cone = Region::c(theta)?;
    let na = |s: &str| Ok(Comparison::NotApplicable { reason: s.to_string() });
    if p.z > 0.0 || q.z > 0.0 {
        return na("z above the horizontal plane");
    }
    if q.rho() > p.rho() {
        return na("rho_q > rho_p");
    }
    if !(cone.contains(p) && cone.contains(q)) {
        return na("outside the cone");
    }
    let (Ok(bp), Ok(bq)) = (ball_rp(alpha, p), ball_rp(alpha, q)) else {
        return na("identity point");
    };
    if bp.slack(q) >= -HYPOTHESIS_MARGIN || bq.slack(p) >= -HYPOTHESIS_MARGIN {
        return na("one ball contains the other center");
    }
    let z_slack = (2.0 * p.z - q.z) / p.z.abs().max(q.z.abs());
    let rho_slack = (p.rho() * (2.0 * theta).cos() - q.rho()) / p.rho();
    Ok(Comparison::Checked {
        z_slack,
        rho_slack,
        pass: z_slack > 0.0 && rho_slack > 0.0,
    })
}

fn polar(rho: f64, phi: f64, z: f64) -> Point {
    Point::new(rho * phi.cos(), rho * phi.sin(), z)
}

/// Draws up to `max_tries` candidate pairs until one satisfies the hypotheses.
fn comparison_pair(r: &mut SeededRng, alpha: f64, theta_max: f64, max_tries: usize) -> Option<(f64, Point, Point)> {
    for _ in 0..max_tries {
        let theta = r.gen_range(0.0..theta_max).max(f64::MIN_POSITIVE);
        let p = polar(1.0, r.gen_range(-theta..theta), -log_uniform(r, 1e-3, 1e3));
        let q = polar(
            log_uniform(r, 1e-4, 1.0),
            r.gen_range(-theta..theta),
            -log_uniform(r, 1e-6, 1e4),
        );
        if let Ok(Comparison::Checked { .. }) = verify_comparison(alpha, theta, &p, &q) {
            return Some((theta, p, q));
        }
    }
    None
}

/// Sampled comparison check: each sample is one hypothesis-satisfying pair
/// found by rejection, with its own `θ ∈ (0, θ_max)`.
pub fn verify_comparison_sampled(alpha: f64, theta_max: f64, samples: usize, seed: u64) -> Result<Report> {
    check_alpha(alpha)?;
    Region::c(theta_max)?;
    let w = run_sampled(samples, seed, |r| {
        let (theta, p, q) = comparison_pair(r, alpha, theta_max, 1000)?;
        match verify_comparison(alpha, theta, &p, &q).ok()? {
            Comparison::Checked { z_slack, rho_slack, .. } => Some((z_slack.min(rho_slack), vec![p, q])),
            Comparison::NotApplicable { .. } => None,
        }
    });
    Ok(Report::new("comparison", seed)
        .param("alpha", alpha)
        .param("theta", theta_max)
        .with_worst(samples, w, f64::MIN_POSITIVE))
}

fn angle_between(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 * b.1 - a.1 * b.0).atan2(a.0 * b.0 + a.1 * b.1).abs()
}

/// Angular slack clamped so that its sign agrees with the exact predicate.
fn signed(pred: bool, angular: f64) -> f64 {
    if pred {
        angular.max(0.0)
    } else {
        angular.min(-f64::MIN_POSITIVE)
    }
}

/// `p, q ∈ C(θ) ⇒ q ∈ C(z_q, π(p), 2θ)`.
pub fn verify_prop1(theta: f64, samples: usize, seed: u64) -> Result<Report> {
    let c = Region::c(theta)?;
    let w = run_sampled(samples, seed, |r| {
        let p = c.sample(r, 10.0).ok()?;
        let q = c.sample(r, 10.0).ok()?;
        let cone = Region::ConeSection {
            z: q.z,
            axis: (p.x, p.y),
            theta: 2.0 * theta,
        };
        let ang = 2.0 * theta - angle_between((p.x, p.y), (q.x, q.y));
        Some((signed(cone.contains(&q), ang), vec![p, q]))
    });
    Ok(Report::new("prop1", seed)
        .param("theta", theta)
        .with_worst(samples, w, 0.0))
}

fn random_axis_point(r: &mut SeededRng) -> Option<Point> {
    let p = dilate_unchecked(log_uniform(r, 1e-2, 1e2), &unit_vector(r));
    (p.rho() > 0.0).then_some(p)
}

/// `Q(z, π(p), θ) ⊂ C(z, π(p), θ)`.
pub fn verify_prop2(theta: f64, samples: usize, seed: u64) -> Result<Report> {
    Region::c(theta)?;
    let w = run_sampled(samples, seed, |r| {
        let p = random_axis_point(r)?;
        let z = r.gen_range(-5.0..5.0);
        let q = Region::quad(z, (p.x, p.y), theta).ok()?.sample(r, 0.0).ok()?;
        let cone = Region::ConeSection {
            z,
            axis: (p.x, p.y),
            theta,
        };
        let ang = theta - angle_between((p.x, p.y), (q.x, q.y));
        Some((signed(cone.contains(&q), ang), vec![p, q]))
    });
    Ok(Report::new("prop2", seed)
        .param("theta", theta)
        .with_worst(samples, w, 0.0))
}

/// `C(z, π(p), θ) ∩ {ρ_q cosθ ≤ ρ_p} ⊂ Q(z, π(p), θ)` for `θ < π/4`.
pub fn verify_prop4(theta: f64, samples: usize, seed: u64) -> Result<Report> {
    Region::c(theta)?;
    if theta >= FRAC_PI_4 {
        return Err(invalid("theta", "need θ < π/4"));
    }
    let w = run_sampled(samples, seed, |r| {
        let p = random_axis_point(r)?;
        let z = r.gen_range(-5.0..5.0);
        let cone = Region::ConeSection {
            z,
            axis: (p.x, p.y),
            theta,
        };
        let q = cone.sample(r, p.rho() / theta.cos()).ok()?;
        if q.rho() * theta.cos() > p.rho() {
            return None;
        }
        let quad = Region::Quad {
            z,
            axis: (p.x, p.y),
            theta,
        };
        Some((if quad.contains(&q) { 0.0 } else { -1.0 }, vec![p, q]))
    });
    Ok(Report::new("prop4", seed)
        .param("theta", theta)
        .with_worst(samples, w, 0.0))
}

/// Lemma whose hidden constants [`threshold_search`] estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdLemma {
    XAxis0,
    ZAxis0,
    ComparisonInCone,
}

/// Empirical certificate from a threshold sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thresholds {
    pub lemma: ThresholdLemma,
    /// `θ₀` and `a₀`, or `a₁` and `b₁`, or `θ₁`.
    pub values: std::collections::BTreeMap<String, f64>,
    /// Report of the passing configuration.
    pub report: Report,
    pub trace: Vec<String>,
}

/// Geometric sweep from `θ = π/8`, `a = 2`, `b = 1/2`: θ halves, a doubles,
/// b halves, until the sampled check passes.
pub fn threshold_search(alpha: f64, lemma: ThresholdLemma, samples: usize, seed: u64) -> Result<Thresholds> {
    check_alpha(alpha)?;
    let mut trace = Vec::new();
    let mut values = std::collections::BTreeMap::new();
    match lemma {
        ThresholdLemma::XAxis0 => {
            // Widest admissible b in (0, 1).
            let b = 1.0 - 1e-6;
            for i in 0..8 {
                let theta = FRAC_PI_8 / f64::powi(2.0, i);
                for j in 0..40 {
                    let a = 2.0 * f64::powi(2.0, j);
                    let rep = verify_x_axis(alpha, theta, a, b, samples, seed)?;
                    trace.push(format!(
                        "theta={theta:.6e} a={a:e} b={b} worst={:?} pass={}",
                        rep.worst_slack, rep.pass
                    ));
                    if rep.pass {
                        values.insert("theta0".into(), theta);
                        values.insert("a0".into(), a);
                        values.insert("b".into(), b);
                        return Ok(Thresholds {
                            lemma,
                            values,
                            report: rep,
                            trace,
                        });
                    }
                }
            }
        }
        ThresholdLemma::ZAxis0 => {
            for k in 0..40 {
                let a = 2.0 * f64::powi(2.0, k);
                let b = 0.5 * f64::powi(0.5, k);
                let rep = verify_z_axis(alpha, a, b, samples, seed)?;
                trace.push(format!("a={a:e} b={b:e} worst={:?} pass={}", rep.worst_slack, rep.pass));
                if rep.pass {
                    values.insert("a1".into(), a);
                    values.insert("b1".into(), b);
                    return Ok(Thresholds {
                        lemma,
                        values,
                        report: rep,
                        trace,
                    });
                }
            }
        }
        ThresholdLemma::ComparisonInCone => {
            for i in 0..12 {
                let theta = FRAC_PI_8 / f64::powi(2.0, i);
                let rep = verify_comparison_sampled(alpha, theta, samples, seed)?;
                let full = rep.applicable == Some(samples);
                trace.push(format!(
                    "theta={theta:.6e} applicable={:?} worst={:?} pass={}",
                    rep.applicable, rep.worst_slack, rep.pass
                ));
                if rep.pass && full {
                    values.insert("theta1".into(), theta);
                    return Ok(Thresholds {
                        lemma,
                        values,
                        report: rep,
                        trace,
                    });
                }
            }
        }
    }
    Err(Error::SweepExhausted {
        trace: trace.join("; "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: f64 = 2.0;

    #[test]
    fn sev1_passes_at_theta2() {
        let t2 = derived_constants(A).unwrap().theta2;
        let r = verify_sev1(A, t2, 5000, 1).unwrap();
        assert!(r.pass, "{r:?}");
        let r = verify_sev1(A, t2 / 2.0, 5000, 2).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn sev1_fails_well_above_theta2() {
        let r = verify_sev1(A, 1.2, 5000, 1).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn quad_inclusion_is_exact() {
        let p = Point::new(1.0, 0.5, -0.3);
        let b = ball_rp(A, &p).unwrap();
        let q = Region::quad(p.z, (p.x, p.y), 0.2).unwrap();
        let r = verify_inclusion(&Inner::Region { region: q, extent: 0.0 }, &b, 10, INCLUSION_TOL, 0).unwrap();
        assert_eq!(r.samples, 4);
        assert!(r.pass);
    }

    #[test]
    fn zero_point_rejected() {
        assert_eq!(ball_rp(A, &Point::ORIGIN), Err(Error::ZeroPoint([0.0; 3])));
    }

    #[test]
    fn empty_inclusion_rejected() {
        let b = ball_rp(A, &Point::new(1.0, 0.0, 0.0)).unwrap();
        assert!(verify_inclusion(&Inner::Points(vec![]), &b, 1, 0.0, 0).is_err());
        let c = Region::c(0.1).unwrap();
        assert!(verify_inclusion(&Inner::Region { region: c, extent: 0.0 }, &b, 1, 0.0, 0).is_err());
    }

    #[test]
    fn pp_and_tt_hold() {
        assert!(verify_pp(A, 2.0, 1.0, 0.5, 5000, 1).unwrap().pass);
        assert!(verify_pp(A, 1.0, 1.0, 0.7, 5000, 2).unwrap().pass);
        assert!(verify_tt(A, 1.0, 0.5, 5000, 3).unwrap().pass);
        assert!(verify_tt(A, 3.0, 2.0, 5000, 4).unwrap().pass);
    }

    #[test]
    fn comparison_examples() {
        let t = 0.1;
        let p = Point::new(1.0, 0.0, -1.0);
        assert!(matches!(
            verify_comparison(A, t, &p, &p).unwrap(),
            Comparison::NotApplicable { .. }
        ));
        // q inside B(p, r_p).
        let q = Point::new(0.9, 0.0, -1.0);
        assert!(matches!(
            verify_comparison(A, t, &p, &q).unwrap(),
            Comparison::NotApplicable { .. }
        ));
    }

    #[test]
    fn cone_properties() {
        assert!(verify_prop1(FRAC_PI_8, 10_000, 1).unwrap().pass);
        assert!(verify_prop2(FRAC_PI_8, 10_000, 2).unwrap().pass);
        assert!(verify_prop4(FRAC_PI_8, 10_000, 3).unwrap().pass);
        assert!(verify_prop4(0.7, 10_000, 4).unwrap().pass);
    }

    #[test]
    fn thresholds_found_for_alpha_two() {
        for lemma in [
            ThresholdLemma::XAxis0,
            ThresholdLemma::ZAxis0,
            ThresholdLemma::ComparisonInCone,
        ] {
            let t = threshold_search(A, lemma, 10_000, 0xB5C0).unwrap();
            assert!(t.report.pass, "{lemma:?} {:?}", t.trace);
        }
    }

    #[test]
    fn thresholds_imply_axis_lemmas() {
        let x = threshold_search(A, ThresholdLemma::XAxis0, 10_000, 1).unwrap();
        let (th, a) = (x.values["theta0"], x.values["a0"]);
        assert!(verify_x_axis0(A, th, a, 0.5, 20_000, 2).unwrap().pass);
        let z = threshold_search(A, ThresholdLemma::ZAxis0, 10_000, 1).unwrap();
        let (a1, b1) = (z.values["a1"], z.values["b1"]);
        assert!(verify_z_axis0(A, a1, b1, 20_000, 2).unwrap().pass);
    }
}
