//! The first Heisenberg group in exponential coordinates.
//!
//! Points are `(x, y, z)` with the product
//! `(x, y, z)·(x', y', z') = (x + x', y + y', z + z' + (x y' − y x')/2)`.
//! Dilations `δ_λ(x, y, z) = (λx, λy, λ²z)` are group automorphisms; rotations
//! about the vertical axis and the reflection `(x, y, z) ↦ (x, −y, −z)` are
//! isometries of every rotationally invariant homogeneous distance used here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of H¹. Serialized as `[x, y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 3]", try_from = "[f64; 3]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point {
    pub const ORIGIN: Point = Point::new(0.0, 0.0, 0.0);

    /// Unchecked constructor. Use [`Point::try_new`] for untrusted input.
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point { x, y, z }
    }

    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Point { x, y, z })
        } else {
            Err(Error::NonFinitePoint(x, y, z))
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Group product `self · other`.
    pub fn mul(&self, other: &Point) -> Point {
        multiply(self, other)
    }

    pub fn inv(&self) -> Point {
        inverse(self)
    }

    /// Horizontal norm ρ = √(x² + y²).
    pub fn rho(&self) -> f64 {
        rho(self)
    }

    /// Projection to the horizontal plane.
    pub fn project(&self) -> (f64, f64) {
        project(self)
    }

    /// Euclidean convex combination `(1 − t)·self + t·other` in ℝ³.
    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        Point::new(
            self.x + t * (other.x - self.x),
            self.y + t * (other.y - self.y),
            self.z + t * (other.z - self.z),
        )
    }

    pub fn max_abs_diff(&self, other: &Point) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

impl From<Point> for [f64; 3] {
    fn from(p: Point) -> Self {
        p.to_array()
    }
}

impl TryFrom<[f64; 3]> for Point {
    type Error = Error;

    fn try_from(a: [f64; 3]) -> Result<Self> {
        Point::try_new(a[0], a[1], a[2])
    }
}

pub fn multiply(p: &Point, q: &Point) -> Point {
    Point::new(p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - p.y * q.x))
}

pub fn inverse(p: &Point) -> Point {
    Point::new(-p.x, -p.y, -p.z)
}

/// `p⁻¹·q`, evaluated directly rather than through [`inverse`] and
/// [`multiply`] (same value, one fewer rounding on z).
pub fn relative(p: &Point, q: &Point) -> Point {
    Point::new(q.x - p.x, q.y - p.y, q.z - p.z - 0.5 * (p.x * q.y - p.y * q.x))
}

pub fn dilate(lambda: f64, p: &Point) -> Result<Point> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::NonPositiveDilation(lambda));
    }
    Ok(dilate_unchecked(lambda, p))
}

pub(crate) fn dilate_unchecked(lambda: f64, p: &Point) -> Point {
    Point::new(lambda * p.x, lambda * p.y, lambda * lambda * p.z)
}

pub fn rotate_z(theta: f64, p: &Point) -> Point {
    let (s, c) = theta.sin_cos();
    Point::new(p.x * c - p.y * s, p.x * s + p.y * c, p.z)
}

pub fn reflect(p: &Point) -> Point {
    Point::new(p.x, -p.y, -p.z)
}

pub fn rho(p: &Point) -> f64 {
    p.x.hypot(p.y)
}

pub fn project(p: &Point) -> (f64, f64) {
    (p.x, p.y)
}
