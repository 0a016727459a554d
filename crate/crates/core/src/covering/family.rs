use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Point;
use crate::metrics::{Ball, DistanceModel};

/// Witness margins at or above this value count as containment.
pub const WITNESS_TOL: f64 = -1e-12;

/// Finite family of closed balls sharing one distance model, together with a
/// candidate common point.
///
/// JSON: `{"model":"box","witness":[x,y,z],"balls":[{"center":[x,y,z],"radius":r}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct BesicovitchFamily {
    model: DistanceModel,
    witness: Point,
    balls: Vec<Ball>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    #[serde(flatten)]
    model: DistanceModel,
    witness: Point,
    balls: Vec<BallRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BallRepr {
    center: Point,
    radius: f64,
}

impl TryFrom<FamilyRepr> for BesicovitchFamily {
    type Error = Error;

    fn try_from(r: FamilyRepr) -> Result<Self> {
        let balls = r
            .balls
            .into_iter()
            .map(|b| Ball::new(b.center, b.radius, r.model))
            .collect::<Result<Vec<_>>>()?;
        BesicovitchFamily::from_balls(balls, r.witness)
    }
}

impl From<BesicovitchFamily> for FamilyRepr {
    fn from(f: BesicovitchFamily) -> Self {
        FamilyRepr {
            model: f.model,
            witness: f.witness,
            balls: f
                .balls
                .into_iter()
                .map(|b| BallRepr {
                    center: b.center,
                    radius: b.radius,
                })
                .collect(),
        }
    }
}

impl BesicovitchFamily {
    /// Builds a family; it is not checked for the Besicovitch conditions here.
    pub fn from_balls(balls: Vec<Ball>, witness: Point) -> Result<Self> {
        let first = balls.first().ok_or(Error::EmptyFamily)?;
        let model = first.model;
        if balls.iter().any(|b| b.model != model) {
            return Err(Error::MixedModels);
        }
        if !witness.is_finite() {
            return Err(Error::NonFinitePoint(witness.x, witness.y, witness.z));
        }
        Ok(BesicovitchFamily { model, witness, balls })
    }

    /// Balls `B(p, d(w, p))` through the witness `w`.
    pub fn through_witness(model: DistanceModel, centers: &[Point], witness: Point) -> Result<Self> {
        let balls = centers
            .iter()
            .map(|c| Ball::new(*c, model.distance(&witness, c), model))
            .collect::<Result<Vec<_>>>()?;
        Self::from_balls(balls, witness)
    }

    pub fn model(&self) -> DistanceModel {
        self.model
    }

    pub fn witness(&self) -> Point {
        self.witness
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn centers(&self) -> Vec<Point> {
        self.balls.iter().map(|b| b.center).collect()
    }

    pub fn margins(&self) -> Margins {
        margins(&self.model, &self.balls, &self.witness)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Separation numbers of a family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Margins {
    /// `min_{B ≠ B'} d(x_B, x_B') − r_B'`; `None` for a single ball.
    pub exclusion_margin: Option<f64>,
    /// Same minimum with each term divided by `r_B'`.
    pub relative_exclusion_margin: Option<f64>,
    /// Ordered pair `(B, B')` attaining the exclusion margin.
    pub worst_pair: Option<(usize, usize)>,
    /// `min_B r_B − d(x_B, witness)`.
    pub witness_margin: f64,
    pub worst_witness_ball: usize,
}

fn margins(model: &DistanceModel, balls: &[Ball], witness: &Point) -> Margins {
    let mut ex: Option<(f64, f64, (usize, usize))> = None;
    for (i, a) in balls.iter().enumerate() {
        for (j, b) in balls.iter().enumerate() {
            if i == j {
                continue;
            }
            let m = model.distance(&a.center, &b.center) - b.radius;
            let rel = m / b.radius;
            ex = match ex {
                Some((best, brel, pair)) if !(m < best) => Some((best, brel.min(rel), pair)),
                Some((_, brel, _)) => Some((m, brel.min(rel), (i, j))),
                None => Some((m, rel, (i, j))),
            };
        }
    }
    let mut wm = f64::INFINITY;
    let mut wi = 0;
    for (i, b) in balls.iter().enumerate() {
        let m = b.radius - model.distance(&b.center, witness);
        if m < wm || m.is_nan() {
            wm = m;
            wi = i;
        }
    }
    Margins {
        exclusion_margin: ex.map(|e| e.0),
        relative_exclusion_margin: ex.map(|e| e.1),
        worst_pair: ex.map(|e| e.2),
        witness_margin: wm,
        worst_witness_ball: wi,
    }
}

/// Outcome of [`verify_family`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyReport {
    pub model: DistanceModel,
    pub cardinality: usize,
    #[serde(flatten)]
    pub margins: Margins,
    pub require_margin: f64,
    pub pass: bool,
}

/// Recomputes both margins. Passes iff every center lies outside every other
/// ball by more than `require_margin` and the witness margin is at least
/// [`WITNESS_TOL`].
pub fn verify_family(f: &BesicovitchFamily, require_margin: f64) -> Result<FamilyReport> {
    if f.balls.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if f.balls.iter().any(|b| b.model != f.model) {
        return Err(Error::MixedModels);
    }
    let m = f.margins();
    let pass = m.exclusion_margin.is_none_or(|e| e > require_margin) && m.witness_margin >= WITNESS_TOL;
    Ok(FamilyReport {
        model: f.model,
        cardinality: f.len(),
        margins: m,
        require_margin,
        pass,
    })
}
