//! Regions of H¹ used in the covering argument, with exact membership
//! predicates and seeded samplers.

use std::f64::consts::FRAC_PI_2;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::group::Point;

/// Region variants. Open conditions are tested strictly, planar regions
/// require the exact plane coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "region", rename_all = "snake_case")]
pub enum Region {
    /// `x > a, |z| < b, |y| < x tanθ`.
    P { a: f64, b: f64, theta: f64 },
    /// `z < −a, ρ < b`.
    T { a: f64, b: f64 },
    /// `|y| < x tanθ`.
    C { theta: f64 },
    /// Plane `x = t`: `|y| < t tanθ, |z| < b`.
    R { t: f64, b: f64, theta: f64 },
    /// Plane `z = t`: `ρ < b`.
    D { t: f64, b: f64 },
    /// Closed planar half cone at height `z`, vertex on the z-axis, axis
    /// through `axis`, aperture `2θ`.
    ConeSection { z: f64, axis: (f64, f64), theta: f64 },
    /// Convex hull of [`quad_vertices`] at height `z`.
    Quad { z: f64, axis: (f64, f64), theta: f64 },
}

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < FRAC_PI_2 {
        Ok(())
    } else {
        Err(invalid("theta", format!("must lie in (0, π/2), got {theta}")))
    }
}

fn check_pos(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("must be positive and finite, got {v}")))
    }
}

fn check_axis(axis: (f64, f64)) -> Result<()> {
    if !(axis.0.is_finite() && axis.1.is_finite()) {
        return Err(invalid("axis", "non-finite"));
    }
    if axis.0 == 0.0 && axis.1 == 0.0 {
        return Err(Error::DegenerateAxis);
    }
    Ok(())
}

fn cross(ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    ax * by - ay * bx
}

impl Region {
    pub fn p(a: f64, b: f64, theta: f64) -> Result<Self> {
        check_pos("a", a)?;
        check_pos("b", b)?;
        check_theta(theta)?;
        Ok(Region::P { a, b, theta })
    }

    pub fn t(a: f64, b: f64) -> Result<Self> {
        check_pos("a", a)?;
        check_pos("b", b)?;
        Ok(Region::T { a, b })
    }

    pub fn c(theta: f64) -> Result<Self> {
        check_theta(theta)?;
        Ok(Region::C { theta })
    }

    pub fn r(t: f64, b: f64, theta: f64) -> Result<Self> {
        check_pos("t", t)?;
        check_pos("b", b)?;
        check_theta(theta)?;
        Ok(Region::R { t, b, theta })
    }

    pub fn d(t: f64, b: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(invalid("t", "non-finite"));
        }
        check_pos("b", b)?;
        Ok(Region::D { t, b })
    }

    pub fn cone_section(z: f64, axis: (f64, f64), theta: f64) -> Result<Self> {
        check_axis(axis)?;
        check_theta(theta)?;
        Ok(Region::ConeSection { z, axis, theta })
    }

    pub fn quad(z: f64, axis: (f64, f64), theta: f64) -> Result<Self> {
        check_axis(axis)?;
        check_theta(theta)?;
        Ok(Region::Quad { z, axis, theta })
    }

    pub fn contains(&self, p: &Point) -> bool {
        match *self {
            Region::P { a, b, theta } => p.x > a && p.z.abs() < b && p.y.abs() < p.x * theta.tan(),
            Region::T { a, b } => p.z < -a && p.rho() < b,
            Region::C { theta } => p.y.abs() < p.x * theta.tan(),
            Region::R { t, b, theta } => p.x == t && p.y.abs() < t * theta.tan() && p.z.abs() < b,
            Region::D { t, b } => p.z == t && p.rho() < b,
            Region::ConeSection { z, axis, theta } => {
                p.z == z && {
                    let dot = p.x * axis.0 + p.y * axis.1;
                    dot >= 0.0 && cross(axis.0, axis.1, p.x, p.y).abs() <= theta.tan() * dot
                }
            }
            Region::Quad { z, axis, theta } => {
                if p.z != z {
                    return false;
                }
                let [pz, plus, minus, check] = vertices(axis, z, theta);
                // Counter-clockwise: p_z, p⁻, p̌, p⁺.
                let ring = [pz, minus, check, plus];
                (0..4).all(|i| {
                    let a = ring[i];
                    let b = ring[(i + 1) % 4];
                    cross(b.x - a.x, b.y - a.y, p.x - a.x, p.y - a.y) >= 0.0
                })
            }
        }
    }

    /// Height of the plane for planar regions.
    pub fn plane_z(&self) -> Option<f64> {
        match *self {
            Region::D { t, .. } => Some(t),
            Region::ConeSection { z, .. } | Region::Quad { z, .. } => Some(z),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, Region::R { .. } | Region::D { .. } | Region::Quad { .. })
    }

    /// Draws one point of the region. Unbounded directions are truncated at
    /// `extent` (ignored for bounded regions). Planar regions are sampled
    /// uniformly by area.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, extent: f64) -> Result<Point> {
        for _ in 0..1000 {
            let p = self.draw(rng, extent)?;
            if self.contains(&p) {
                return Ok(p);
            }
        }
        Err(Error::EmptyRegion(format!("{self:?}")))
    }

    fn draw<R: Rng + ?Sized>(&self, rng: &mut R, extent: f64) -> Result<Point> {
        let need_extent = || -> Result<()> {
            if extent > 0.0 && extent.is_finite() {
                Ok(())
            } else {
                Err(Error::EmptyRegion(format!("{self:?} needs a positive extent")))
            }
        };
        Ok(match *self {
            Region::P { a, b, theta } => {
                need_extent()?;
                let x = a + rng.gen::<f64>() * extent;
                let w = x * theta.tan();
                Point::new(x, rng.gen_range(-w..=w), rng.gen_range(-b..=b))
            }
            Region::T { a, b } => {
                need_extent()?;
                let (x, y) = disc(rng, b);
                Point::new(x, y, -a - rng.gen::<f64>() * extent)
            }
            Region::C { theta } => {
                need_extent()?;
                let (x, y) = sector(rng, (1.0, 0.0), theta, extent);
                Point::new(x, y, rng.gen_range(-extent..=extent))
            }
            Region::R { t, b, theta } => {
                let w = t * theta.tan();
                Point::new(t, rng.gen_range(-w..=w), rng.gen_range(-b..=b))
            }
            Region::D { t, b } => {
                let (x, y) = disc(rng, b);
                Point::new(x, y, t)
            }
            Region::ConeSection { z, axis, theta } => {
                need_extent()?;
                let (x, y) = sector(rng, axis, theta, extent);
                Point::new(x, y, z)
            }
            Region::Quad { z, axis, theta } => {
                let [pz, plus, minus, _] = vertices(axis, z, theta);
                let (s, t) = (rng.gen::<f64>(), rng.gen::<f64>());
                Point::new(
                    pz.x + s * (minus.x - pz.x) + t * (plus.x - pz.x),
                    pz.y + s * (minus.y - pz.y) + t * (plus.y - pz.y),
                    z,
                )
            }
        })
    }
}

fn disc<R: Rng + ?Sized>(rng: &mut R, b: f64) -> (f64, f64) {
    let r = b * rng.gen::<f64>().sqrt();
    let phi = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    (r * phi.cos(), r * phi.sin())
}

fn sector<R: Rng + ?Sized>(rng: &mut R, axis: (f64, f64), theta: f64, extent: f64) -> (f64, f64) {
    let base = axis.1.atan2(axis.0);
    let r = extent * rng.gen::<f64>().sqrt();
    let phi = base + rng.gen_range(-theta..=theta);
    (r * phi.cos(), r * phi.sin())
}

fn vertices(axis: (f64, f64), z: f64, theta: f64) -> [Point; 4] {
    let (x, y) = axis;
    let t = theta.tan();
    [
        Point::new(0.0, 0.0, z),
        Point::new(x - y * t, y + x * t, z),
        Point::new(x + y * t, y - x * t, z),
        Point::new(2.0 * x, 2.0 * y, z),
    ]
}

/// Vertices `[p_z, p⁺_θ, p⁻_θ, p̌_z]` of the quadrilateral at height `z`.
pub fn quad_vertices(p: &Point, z: f64, theta: f64) -> Result<[Point; 4]> {
    check_axis((p.x, p.y))?;
    Ok(vertices((p.x, p.y), z, theta))
}

pub fn region_contains(r: &Region, p: &Point) -> bool {
    r.contains(p)
}
