//! Besicovitch families: verification, reduction to normal form, bounds and
//! constructions.

mod bound;
mod family;
mod ingoing;
mod outgoing;
mod reduce;
mod search;

pub use bound::{bound_report, BoundReport};
pub use family::{verify_family, BesicovitchFamily, FamilyReport, Margins, WITNESS_TOL};
pub use ingoing::{ingoing_corner_family, AngleSchedule, IngoingFamily, IngoingParams};
pub use outgoing::{cap_profile, outgoing_corner_family, OutgoingFamily, OutgoingParams, OutgoingStep};
pub use reduce::{reduce_family, Reduction, Transform};
pub use search::{search_max_family, SearchResult, TRIAL_BUDGET};
