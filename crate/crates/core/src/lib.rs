//! Homogeneous distances on the first Heisenberg group and the Besicovitch
//! covering property.
//!
//! The crate evaluates several homogeneous distances, checks the geometric
//! inequalities behind the covering property of the Euclidean-ball distance
//! `d_α`, and constructs large Besicovitch families for distances that lack it.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod axioms;
pub mod chain;
pub mod covering;
pub mod error;
pub mod group;
pub mod lemmas;
pub mod metrics;
pub mod regions;
pub mod report;
pub mod sampling;
pub mod sphere;

pub use error::{Error, Result};
pub use group::Point;
pub use metrics::{Ball, DistanceModel};
