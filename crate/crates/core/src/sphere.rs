//! Cross-sections of the unit sphere in a vertical coordinate plane.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::group::Point;
use crate::metrics::DistanceModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Plane {
    Xz,
    Yz,
}

impl Plane {
    fn point(&self, s: f64, z: f64) -> Point {
        match self {
            Plane::Xz => Point::new(s, 0.0, z),
            Plane::Yz => Point::new(0.0, s, z),
        }
    }
}

impl std::str::FromStr for Plane {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xz" => Ok(Plane::Xz),
            "yz" => Ok(Plane::Yz),
            _ => Err(invalid("plane", format!("expected xz or yz, got {s:?}"))),
        }
    }
}

/// One row; `None` where the vertical line misses the ball or the root
/// search fails.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectionRow {
    pub s: f64,
    pub z_plus: Option<f64>,
    pub z_minus: Option<f64>,
}

/// Root of `t ↦ ‖f(t)‖ − 1` on `t ≥ 0`, assuming `‖f(0)‖ ≤ 1` and growth in `t`.
fn root(f: impl Fn(f64) -> Point, m: &DistanceModel) -> Option<f64> {
    let g = |t: f64| m.norm(&f(t)) - 1.0;
    if !(g(0.0) <= 0.0) {
        return None;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    let mut k = 0;
    while g(hi) <= 0.0 {
        lo = hi;
        hi *= 2.0;
        k += 1;
        if k > 200 {
            return None;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// `resolution + 1` rows at `s_i = s_max(2i/resolution − 1)`, where `s_max`
/// is where the plane's horizontal axis leaves the unit ball. Each row
/// bisects `‖(s, ±z)‖ = 1` along the vertical line.
pub fn sphere_section(m: &DistanceModel, plane: Plane, resolution: usize) -> Result<Vec<SectionRow>> {
    if resolution < 8 {
        return Err(invalid("resolution", "must be at least 8"));
    }
    if m.is_pseudo() {
        return Err(invalid("model", "the unit ball of a pseudo-distance is unbounded"));
    }
    let s_max = root(|t| plane.point(t, 0.0), m).ok_or_else(|| invalid("model", "no horizontal extent"))?;
    Ok((0..=resolution)
        .map(|i| {
            let s = s_max * (2.0 * i as f64 / resolution as f64 - 1.0);
            SectionRow {
                s,
                z_plus: root(|t| plane.point(s, t), m),
                z_minus: root(|t| plane.point(s, -t), m).map(|t| -t),
            }
        })
        .collect())
}

/// CSV with header `x,z_plus,z_minus` (or `y,…`); failed cells are empty.
pub fn section_csv(rows: &[SectionRow], plane: Plane) -> String {
    let mut out = String::from(match plane {
        Plane::Xz => "x,z_plus,z_minus\n",
        Plane::Yz => "y,z_plus,z_minus\n",
    });
    let cell = |v: Option<f64>| v.map(|v| format!("{v}")).unwrap_or_default();
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.s, cell(r.z_plus), cell(r.z_minus));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn middle(m: &DistanceModel) -> SectionRow {
        let rows = sphere_section(m, Plane::Xz, 8).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[4].s, 0.0);
        rows[4]
    }

    #[test]
    fn poles() {
        let r = middle(&DistanceModel::ball_norm(2.0).unwrap());
        assert!((r.z_plus.unwrap() - 2.0).abs() < 1e-12);
        assert!((r.z_minus.unwrap() + 2.0).abs() < 1e-12);
        for m in [DistanceModel::kappa_gauge(1.0, 2.0).unwrap(), DistanceModel::Box] {
            let r = middle(&m);
            assert!((r.z_plus.unwrap() - 0.25).abs() < 1e-12);
            assert!((r.z_minus.unwrap() + 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn rows_lie_on_the_sphere() {
        let m = DistanceModel::kappa_gauge(1.0, 2.0).unwrap();
        for plane in [Plane::Xz, Plane::Yz] {
            let rows = sphere_section(&m, plane, 64).unwrap();
            assert!((rows[0].s + 0.5).abs() < 1e-12);
            for r in &rows[1..64] {
                let z = r.z_plus.unwrap();
                assert!((m.norm(&plane.point(r.s, z)) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn csv_shape_and_errors() {
        let m = DistanceModel::Box;
        let rows = sphere_section(&m, Plane::Xz, 8).unwrap();
        let csv = section_csv(&rows, Plane::Xz);
        assert_eq!(csv.lines().count(), 10);
        assert!(csv.starts_with("x,z_plus,z_minus\n"));
        assert!(sphere_section(&m, Plane::Xz, 7).is_err());
        assert!(sphere_section(&DistanceModel::RhoPseudo, Plane::Xz, 8).is_err());
        assert_eq!(
            section_csv(
                &[SectionRow {
                    s: 1.0,
                    z_plus: None,
                    z_minus: None
                }],
                Plane::Yz
            ),
            "y,z_plus,z_minus\n1,,\n"
        );
    }
}
