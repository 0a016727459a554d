//! Sampled checks of the distance functions themselves: metric axioms,
//! agreement of the closed form with the defining infimum, and the
//! polynomial membership test.

use rand::Rng;

use crate::error::{invalid, Result};
use crate::group::{dilate, multiply, Point};
use crate::metrics::{a_poly, distance_by_bisection, r_of, Ball, DistanceModel, Membership};
use crate::report::{run_sampled, Report};
use crate::sampling::{log_uniform, uniform_point, SeededRng};

pub const TRIANGLE_TOL: f64 = 1e-12;
pub const AXIOM_TOL: f64 = 1e-9;
pub const CLOSED_FORM_TOL: f64 = 1e-9;
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Which axiom a [`verify_metric_axioms`] report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `(d(p,q) + d(q,r) − d(p,r)) / d(p,r) ≥ −1e-12`.
    Triangle,
    Symmetry,
    LeftInvariance,
    Homogeneity,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Triangle,
        Axiom::Symmetry,
        Axiom::LeftInvariance,
        Axiom::Homogeneity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Triangle => "triangle",
            Axiom::Symmetry => "symmetry",
            Axiom::LeftInvariance => "left_invariance",
            Axiom::Homogeneity => "homogeneity",
        }
    }

    /// Tolerance minus the observed relative error for one random triple.
    fn slack(&self, m: &DistanceModel, p: &Point, q: &Point, r: &Point, rng: &mut SeededRng) -> f64 {
        let d = |a: &Point, b: &Point| m.distance(a, b);
        match self {
            Axiom::Triangle => {
                let pr = d(p, r);
                if pr == 0.0 {
                    return TRIANGLE_TOL;
                }
                (d(p, q) + d(q, r) - pr) / pr + TRIANGLE_TOL
            }
            Axiom::Symmetry => {
                let (a, b) = (d(p, q), d(q, p));
                AXIOM_TOL - (a - b).abs() / a.max(1.0)
            }
            Axiom::LeftInvariance => {
                let a = d(p, q);
                let b = d(&multiply(r, p), &multiply(r, q));
                AXIOM_TOL - (a - b).abs() / a.max(1.0)
            }
            Axiom::Homogeneity => {
                let lambda = log_uniform(rng, 1e-3, 1e3);
                let a = lambda * d(p, q);
                let (Ok(lp), Ok(lq)) = (dilate(lambda, p), dilate(lambda, q)) else {
                    return f64::NAN;
                };
                AXIOM_TOL - (d(&lp, &lq) - a).abs() / a.max(lambda)
            }
        }
    }
}

/// One report per axiom over `triples` random triples in `[−w, w]³`.
pub fn verify_metric_axioms(m: &DistanceModel, triples: usize, half_width: f64, seed: u64) -> Result<Vec<Report>> {
    if !(half_width > 0.0) {
        return Err(invalid("half_width", "must be positive"));
    }
    let mut out = Vec::new();
    for ax in Axiom::ALL {
        let w = run_sampled(triples, seed, |rng| {
            let p = uniform_point(rng, half_width);
            let q = uniform_point(rng, half_width);
            let r = uniform_point(rng, half_width);
            let s = ax.slack(m, &p, &q, &r, rng);
            Some((s, vec![p, q, r]))
        });
        let mut rep = Report::new(ax.name(), seed)
            .param("half_width", half_width)
            .with_worst(triples, w, 0.0);
        rep.detail = Some(m.name().to_string());
        if let Some(a) = m.alpha() {
            rep = rep.param("alpha", a);
        }
        out.push(rep);
    }
    Ok(out)
}

/// `|closed form − bisection| ≤ 1e-9` on random pairs in `[−w, w]³`.
pub fn verify_closed_form(alpha: f64, pairs: usize, half_width: f64, seed: u64) -> Result<Report> {
    let m = DistanceModel::ball_norm(alpha)?;
    let w = run_sampled(pairs, seed, |rng| {
        let p = uniform_point(rng, half_width);
        let q = uniform_point(rng, half_width);
        let s = match distance_by_bisection(&m, &p, &q, 1e-13) {
            Ok(b) => CLOSED_FORM_TOL - (m.distance(&p, &q) - b).abs(),
            Err(_) => f64::NAN,
        };
        Some((s, vec![p, q]))
    });
    Ok(Report::new("closed_form", seed)
        .param("alpha", alpha)
        .param("half_width", half_width)
        .with_worst(pairs, w, 0.0))
}

/// Sign of `A_p(q)` against membership in `B(p, r_p)`. Pairs within the
/// boundary band are skipped; the slack of a counted pair is 0 on agreement
/// and −1 on disagreement.
pub fn verify_a_poly(alpha: f64, pairs: usize, half_width: f64, seed: u64) -> Result<Report> {
    let m = DistanceModel::ball_norm(alpha)?;
    let w = run_sampled(pairs, seed, |rng| {
        let p = uniform_point(rng, half_width);
        // Half the draws near the sphere so the band is exercised.
        let q = if rng.gen_bool(0.5) {
            uniform_point(rng, half_width)
        } else {
            let u = uniform_point(rng, 1.0);
            let n = m.norm(&u);
            if n == 0.0 {
                return None;
            }
            let t = r_of(alpha, &p) / n * rng.gen_range(0.98..1.02);
            multiply(&p, &dilate(t, &u).ok()?)
        };
        let ball = Ball::new(p, r_of(alpha, &p), m).ok()?;
        let inside = match ball.classify(&q, BOUNDARY_BAND) {
            Membership::Boundary => return None,
            Membership::Inside => true,
            Membership::Outside => false,
        };
        let a = a_poly(alpha, &p, &q).ok()?;
        Some((if (a <= 0.0) == inside { 0.0 } else { -1.0 }, vec![p, q]))
    });
    Ok(Report::new("a_poly", seed)
        .param("alpha", alpha)
        .param("band", BOUNDARY_BAND)
        .with_worst(pairs, w, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_hold_for_proven_metrics() {
        for m in [
            DistanceModel::ball_norm(1.0).unwrap(),
            DistanceModel::gauge(2.0).unwrap(),
            DistanceModel::Box,
            DistanceModel::kappa_gauge(1.0, 2.0).unwrap(),
        ] {
            for r in verify_metric_axioms(&m, 20_000, 10.0, 1).unwrap() {
                assert!(r.pass, "{} {r:?}", m.name());
            }
        }
    }

    #[test]
    fn rho_pseudo_distance_passes_sampled_axioms() {
        let r = verify_metric_axioms(&DistanceModel::RhoPseudo, 2_000, 10.0, 1).unwrap();
        assert!(r.iter().all(|r| r.pass));
    }

    #[test]
    fn large_alpha_breaks_the_triangle_inequality() {
        let m = DistanceModel::ball_norm(4.0).unwrap();
        let r = verify_metric_axioms(&m, 200_000, 10.0, 1).unwrap();
        assert!(!r[0].pass, "{:?}", r[0]);
        assert!(r[1..].iter().all(|r| r.pass));
    }

    #[test]
    fn closed_form_and_a_poly() {
        assert!(verify_closed_form(2.0, 2_000, 10.0, 2).unwrap().pass);
        let r = verify_a_poly(2.0, 20_000, 10.0, 3).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.applicable.unwrap() > 15_000);
    }

    #[test]
    fn anchor_by_bisection() {
        let m = DistanceModel::ball_norm(2.0).unwrap();
        let b = distance_by_bisection(&m, &Point::ORIGIN, &Point::new(0.0, 0.0, 1.0), 1e-15).unwrap();
        assert!((b - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }
}
