use serde::Serialize;

use super::family::BesicovitchFamily;
use crate::error::{invalid, Error, Result};
use crate::group::Point;
use crate::metrics::{Ball, DistanceModel};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutgoingParams {
    pub kappa: f64,
    pub alpha: f64,
    /// Slope bound in `z⁺ − z⁻ < −a(x⁺ − x⁻)`.
    pub a: f64,
    /// Right end of the flat segment.
    pub x_bar: f64,
    /// Schedule `x_n⁺ = plus/n`, `x_n⁻ = −minus/n`.
    pub plus: f64,
    pub minus: f64,
    /// Starting point `q_0 = (x_0, 0, z_0)`, `z_0 < 0 < x_0`.
    pub x0: f64,
    pub z0: f64,
    pub delta_safe: f64,
    pub flatness_samples: usize,
}

impl Default for OutgoingParams {
    fn default() -> Self {
        OutgoingParams {
            kappa: 1.0,
            alpha: 2.0,
            a: 0.125,
            x_bar: 0.4,
            plus: 1.0,
            minus: 0.5,
            x0: 0.25,
            z0: -0.01,
            delta_safe: 1e-6,
            flatness_samples: 10_000,
        }
    }
}

/// One recursion step.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutgoingStep {
    /// Schedule index used (an integer, stored as a float since it overflows `u64`).
    pub n: f64,
    pub slope: f64,
    /// `min_l d(q_l, q_{k+1}) − r_{k+1}`, divided by `r_l`.
    pub separation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutgoingFamily {
    pub family: BesicovitchFamily,
    pub radii: Vec<f64>,
    pub steps: Vec<OutgoingStep>,
}

/// Upper cap of the unit sphere of `d_{κ,α}` in the xz-plane.
pub fn cap_profile(kappa: f64, alpha: f64, x: f64) -> f64 {
    let t = 1.0 - kappa * x.abs();
    if t <= 0.0 {
        return f64::NAN;
    }
    (t.powi(4) - x.powi(4)).sqrt() / (2.0 * alpha)
}

/// `z(x⁺) − z(x⁻)` without cancellation for tiny `|x|`.
fn cap_difference(kappa: f64, alpha: f64, xp: f64, xm: f64) -> f64 {
    let u = 4.0 * (-kappa * xp.abs()).ln_1p();
    let w = 4.0 * (-kappa * xm.abs()).ln_1p();
    let da = w.exp() * (u - w).exp_m1() - (xp.powi(4) - xm.powi(4));
    let sum = cap_profile(kappa, alpha, xp) + cap_profile(kappa, alpha, xm);
    da / (4.0 * alpha * alpha * sum)
}

/// Checks that `{x⁺ ≤ x ≤ x̄, y = 0, z > z⁺}` misses the open unit ball on a
/// uniform grid. Returns the smallest `‖(x, 0, z⁺)‖ − 1`.
fn flatness(model: &DistanceModel, xp: f64, zp: f64, x_bar: f64, samples: usize) -> f64 {
    let m = samples.max(2);
    (0..m)
        .map(|i| {
            let x = xp + (x_bar - xp) * i as f64 / (m - 1) as f64;
            model.norm(&Point::new(x, 0.0, zp)) - 1.0
        })
        .fold(f64::INFINITY, f64::min)
}

fn fail(step: usize, reason: impl Into<String>) -> Error {
    Error::Construction {
        step,
        reason: reason.into(),
    }
}

/// Family of `n` balls through the origin for a distance whose unit sphere
/// has an outward corner at the north pole.
pub fn outgoing_corner_family(n: usize, p: &OutgoingParams) -> Result<OutgoingFamily> {
    if n < 2 {
        return Err(invalid("N", "need N ≥ 2"));
    }
    let model = DistanceModel::kappa_gauge(p.kappa, p.alpha)?;
    if !model.is_proven_metric() {
        return Err(invalid("kappa/alpha", "need κ ≤ 1 and α ≤ 2"));
    }
    for (name, v) in [
        ("a", p.a),
        ("x_bar", p.x_bar),
        ("plus", p.plus),
        ("minus", p.minus),
        ("x0", p.x0),
    ] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(invalid(name, "must be positive"));
        }
    }
    if !(p.z0 < 0.0) {
        return Err(invalid("z0", "must be negative"));
    }
    let reach = 1.0 / (1.0 + p.kappa);
    if p.x_bar >= reach {
        return Err(invalid("x_bar", format!("must be below {reach}")));
    }
    let width = p.plus + p.minus;
    let margin = 1.0 + p.delta_safe;

    let mut q = vec![Point::new(p.x0, 0.0, p.z0)];
    let mut r = vec![model.norm(&q[0])];
    let mut steps = Vec::new();
    while q.len() < n {
        let k = q.len() - 1;
        let (xk, zk, rk) = (q[k].x, q[k].z, r[k]);
        let lower = [
            rk * width / xk,
            width * zk.abs() / (p.a * xk * xk),
            p.x0 * width / (xk * p.x_bar),
            p.plus / p.x_bar,
            p.minus / reach,
        ];
        let mut nn = (lower.iter().fold(0.0f64, |m, v| m.max(*v)) * margin).ceil().max(1.0);
        if !nn.is_finite() {
            return Err(fail(k + 1, format!("schedule index overflow at r_k = {rk:e}")));
        }
        let mut found = None;
        for _ in 0..64 {
            let (xp, xm) = (p.plus / nn, -p.minus / nn);
            let slope = cap_difference(p.kappa, p.alpha, xp, xm) / (xp - xm);
            let zp = cap_profile(p.kappa, p.alpha, xp);
            if slope < -p.a * margin && flatness(&model, xp, zp, p.x_bar, p.flatness_samples) >= -1e-12 {
                found = Some((xp, xm, slope));
                break;
            }
            nn *= 2.0;
        }
        let Some((xp, xm, slope)) = found else {
            return Err(fail(
                k + 1,
                "slope or flatness condition fails for every schedule index tried",
            ));
        };
        let w = xp - xm;
        let r_next = xk / w;
        if !(rk < r_next && -p.a < w * zk / (xk * xk) && p.x0 <= r_next * p.x_bar) {
            return Err(fail(k + 1, "choice conditions fail in floating point"));
        }
        let zm = cap_profile(p.kappa, p.alpha, xm);
        let qn = Point::new(-r_next * xm, 0.0, -r_next * r_next * zm);
        if !qn.is_finite() {
            return Err(fail(k + 1, format!("non-finite center at r = {r_next:e}")));
        }
        let rn = model.norm(&qn);
        if !(qn.z < zk && 0.0 < qn.x && qn.x < xk && rn > rk) {
            return Err(fail(
                k + 1,
                format!("monotonicity lost: q = {:?}, r = {rn:e}", qn.to_array()),
            ));
        }
        let separation = q
            .iter()
            .zip(&r)
            .map(|(ql, rl)| (model.distance(ql, &qn) - rn) / rl)
            .fold(f64::INFINITY, f64::min);
        if !(separation > p.delta_safe) {
            return Err(fail(
                k + 1,
                format!("separation {separation:e} below δ_safe at n = {nn:e}, r = {rn:e}"),
            ));
        }
        q.push(qn);
        r.push(rn);
        steps.push(OutgoingStep {
            n: nn,
            slope,
            separation,
        });
    }
    let balls = q
        .iter()
        .zip(&r)
        .map(|(c, &rad)| Ball::new(*c, rad, model))
        .collect::<Result<Vec<_>>>()?;
    Ok(OutgoingFamily {
        family: BesicovitchFamily::from_balls(balls, Point::ORIGIN)?,
        radii: r,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::verify_family;

    #[test]
    fn cap_is_on_the_sphere() {
        let m = DistanceModel::kappa_gauge(1.0, 2.0).unwrap();
        for x in [-0.3, -0.01, 0.0, 1e-5, 0.2, 0.45] {
            let z = cap_profile(1.0, 2.0, x);
            assert!((m.norm(&Point::new(x, 0.0, z)) - 1.0).abs() < 1e-14);
        }
        assert_eq!(cap_profile(1.0, 2.0, 0.0), 0.25);
    }

    #[test]
    fn cap_difference_matches_direct() {
        let d = cap_difference(1.0, 2.0, 0.1, -0.05);
        let e = cap_profile(1.0, 2.0, 0.1) - cap_profile(1.0, 2.0, -0.05);
        assert!((d - e).abs() < 1e-15);
        // slope → −κ(plus − minus)/(α(plus + minus)) = −1/6
        let n = 1e20;
        let s = cap_difference(1.0, 2.0, 1.0 / n, -0.5 / n) / (1.5 / n);
        assert!((s + 1.0 / 6.0).abs() < 1e-12, "{s}");
    }

    #[test]
    fn small_families_are_valid() {
        for n in [2, 3, 4] {
            let g = outgoing_corner_family(n, &OutgoingParams::default()).unwrap();
            assert_eq!(g.family.len(), n);
            let v = verify_family(&g.family, 0.0).unwrap();
            assert!(v.pass, "{v:?}");
            for w in g.radii.windows(2) {
                assert!(w[1] > w[0]);
            }
            for s in &g.family.centers().windows(2).collect::<Vec<_>>() {
                assert!(s[1].z < s[0].z && s[0].z < 0.0 && 0.0 < s[1].x && s[1].x < s[0].x);
            }
        }
    }

    #[test]
    fn long_families_fail_with_a_reason() {
        let e = outgoing_corner_family(20, &OutgoingParams::default()).unwrap_err();
        assert!(matches!(e, Error::Construction { .. }), "{e:?}");
    }

    #[test]
    fn rejects_non_metric_parameters() {
        let p = OutgoingParams {
            alpha: 3.0,
            ..OutgoingParams::default()
        };
        assert!(outgoing_corner_family(3, &p).is_err());
        assert!(outgoing_corner_family(1, &OutgoingParams::default()).is_err());
    }
}
