use std::f64::consts::{FRAC_PI_2, FRAC_PI_8, PI};

use serde::Serialize;

use super::family::{verify_family, BesicovitchFamily};
use crate::error::{invalid, Error, Result};
use crate::group::Point;
use crate::metrics::DistanceModel;
use crate::regions::Region;

/// Cardinality bounds for a reduced `d_α` family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub theta: f64,
    pub a: f64,
    pub b: f64,
    /// Radius of the ball `B(0, R)` outside which the axis lemmas apply.
    pub r_scale: f64,
    /// `−min{z : p ∈ B(0, R)}`.
    pub m: f64,
    /// `max{ρ : p ∈ B(0, R)}`.
    pub big_m: f64,
    /// `m` and `M` recomputed by 1-D maximization over the sphere profile.
    pub m_numeric: f64,
    pub big_m_numeric: f64,
    pub reduction_card: usize,
    /// `log₂(m/b) + log_{cos2θ}(b/M) + 3`.
    pub reduced_bound: f64,
    /// `2(π/θ + 1)·reduced_bound + 2`.
    pub full_bound: f64,
    pub holds: bool,
}

/// Golden-section maximization of `f` on `[lo, hi]`.
fn maximize(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - g * (hi - lo);
    let mut d = lo + g * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d);
        }
    }
    f(0.5 * (lo + hi)).max(fc).max(fd)
}

/// Evaluates the cardinality bound on a reduced family (witness at the
/// origin, radii `d(0, p_j)`, centers with `z ≤ 0` in `C(θ)`).
///
/// `a`, `b` and `θ` are the constants for which the axis lemmas and the cone
/// comparison hold, typically from [`crate::lemmas::threshold_search`].
pub fn bound_report(f: &BesicovitchFamily, theta: f64, a: f64, b: f64) -> Result<BoundReport> {
    let DistanceModel::BallNorm { alpha } = f.model() else {
        return Err(Error::NotReduced("model is not ball_norm".into()));
    };
    if !(theta > 0.0 && theta < FRAC_PI_2) || !(a > 0.0) || !(b > 0.0) {
        return Err(invalid("theta/a/b", "need θ ∈ (0, π/2), a > 0, b > 0"));
    }
    if theta > FRAC_PI_8 {
        return Err(invalid("theta", "need θ ≤ π/8"));
    }
    if f.witness() != Point::ORIGIN {
        return Err(Error::NotReduced("witness is not the origin".into()));
    }
    let cone = Region::c(theta)?;
    let model = f.model();
    for (i, ball) in f.balls().iter().enumerate() {
        let p = ball.center;
        if p.z > 0.0 {
            return Err(Error::NotReduced(format!("ball {i} has z > 0")));
        }
        if !cone.contains(&p) {
            return Err(Error::NotReduced(format!("ball {i} lies outside C(θ)")));
        }
        let r = model.norm(&p);
        if (ball.radius - r).abs() > 1e-12 * r {
            return Err(Error::NotReduced(format!("ball {i} radius is not d(0, p)")));
        }
    }
    if !verify_family(f, 0.0)?.pass {
        return Err(Error::InvalidFamily("family fails verification".into()));
    }

    // Closures of the two bounded sets that must sit inside U(0, R); the norm
    // grows with ρ and |z|, so their far corners decide R.
    let r1 = model.norm(&Point::new(a / theta.cos(), 0.0, b));
    let r2 = model.norm(&Point::new(b, 0.0, -a));
    let r_scale = r1.max(r2) * (1.0 + 1e-9);

    // B(0, R) is the Euclidean ball of radius α dilated by R.
    let m = alpha * r_scale * r_scale;
    let big_m = alpha * r_scale;
    let m_numeric = maximize(|t| alpha * t.sin() * r_scale * r_scale, 0.0, PI);
    let big_m_numeric = maximize(|t| alpha * t.cos() * r_scale, -FRAC_PI_2, FRAC_PI_2);

    let c2 = (2.0 * theta).cos();
    let reduced_bound = (m / b).log2() + (b / big_m).ln() / c2.ln() + 3.0;
    let full_bound = 2.0 * (PI / theta + 1.0) * reduced_bound + 2.0;
    let k = f.len();
    Ok(BoundReport {
        theta,
        a,
        b,
        r_scale,
        m,
        big_m,
        m_numeric,
        big_m_numeric,
        reduction_card: k,
        reduced_bound,
        full_bound,
        holds: (k as f64) <= reduced_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    const FRAC_PI_16: f64 = std::f64::consts::PI / 16.0;

    const BN2: DistanceModel = DistanceModel::BallNorm { alpha: 2.0 };

    #[test]
    fn one_ball_family() {
        let f = BesicovitchFamily::through_witness(BN2, &[Point::new(1.0, 0.0, -0.5)], Point::ORIGIN).unwrap();
        let r = bound_report(&f, FRAC_PI_16, 2.0, 0.5).unwrap();
        assert!(r.holds);
        assert!(r.full_bound >= 5.0);
        assert!((r.m - r.m_numeric).abs() < 1e-9 * r.m);
        assert!((r.big_m - r.big_m_numeric).abs() < 1e-9 * r.big_m);
    }

    #[test]
    fn unreduced_rejected() {
        let f = BesicovitchFamily::through_witness(BN2, &[Point::new(1.0, 0.0, 0.5)], Point::ORIGIN).unwrap();
        assert!(matches!(bound_report(&f, 0.1, 2.0, 0.5), Err(Error::NotReduced(_))));
        let g = BesicovitchFamily::through_witness(BN2, &[Point::new(-1.0, 0.0, -0.5)], Point::ORIGIN).unwrap();
        assert!(matches!(bound_report(&g, 0.1, 2.0, 0.5), Err(Error::NotReduced(_))));
        let h = BesicovitchFamily::through_witness(DistanceModel::Box, &[Point::new(1.0, 0.0, -0.5)], Point::ORIGIN)
            .unwrap();
        assert!(bound_report(&h, 0.1, 2.0, 0.5).is_err());
    }
}
