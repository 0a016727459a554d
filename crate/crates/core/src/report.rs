//! Verification reports and the sampled-check driver shared by the lemma
//! checks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::group::Point;
use crate::sampling::{chunks, derive_seed, rng, SeededRng};

/// Outcome of one verification run. Serialized with sorted parameter keys so
/// equal runs give equal bytes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub lemma: String,
    pub params: BTreeMap<String, f64>,
    pub samples: usize,
    pub seed: u64,
    pub pass: bool,
    /// Smallest slack seen; `None` when no sample applied.
    pub worst_slack: Option<f64>,
    /// Point(s) attaining `worst_slack`.
    pub witness: Vec<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub applicable: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    pub fn new(lemma: &str, seed: u64) -> Self {
        Report {
            lemma: lemma.to_string(),
            params: BTreeMap::new(),
            samples: 0,
            seed,
            pass: false,
            worst_slack: None,
            witness: Vec::new(),
            applicable: None,
            detail: None,
        }
    }

    pub fn param(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    /// Fills in `samples`, `worst_slack`, `witness`, `applicable` and sets
    /// `pass` to `worst_slack ≥ margin` (vacuously true with no applicable draws).
    pub(crate) fn with_worst(mut self, samples: usize, w: Worst, margin: f64) -> Self {
        self.samples = samples;
        self.pass = w.slack.is_none_or(|s| s >= margin);
        self.worst_slack = w.slack;
        self.witness = w.witness;
        self.applicable = Some(w.applicable);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Running minimum of a slack function with its witness.
#[derive(Debug, Clone, Default)]
pub(crate) struct Worst {
    pub slack: Option<f64>,
    pub witness: Vec<Point>,
    pub applicable: usize,
}

impl Worst {
    pub fn push(&mut self, slack: f64, witness: impl FnOnce() -> Vec<Point>) {
        self.applicable += 1;
        // NaN slack counts as the worst possible outcome.
        let worse = match self.slack {
            None => true,
            Some(s) => slack < s || (slack.is_nan() && !s.is_nan()),
        };
        if worse {
            self.slack = Some(slack);
            self.witness = witness();
        }
    }

    /// Merge keeping `self` on ties, so merge order decides tie-breaks.
    pub fn merge(mut self, other: Worst) -> Worst {
        let applicable = self.applicable + other.applicable;
        if let Some(s) = other.slack {
            let worse = match self.slack {
                None => true,
                Some(t) => s < t || (s.is_nan() && !t.is_nan()),
            };
            if worse {
                self.slack = other.slack;
                self.witness = other.witness;
            }
        }
        self.applicable = applicable;
        self
    }
}

const CHUNK: usize = 2048;

/// Evaluates `draw` `samples` times in parallel chunks with per-chunk seeded
/// streams. `draw` returns `None` for draws that do not apply.
pub(crate) fn run_sampled<F>(samples: usize, seed: u64, draw: F) -> Worst
where
    F: Fn(&mut SeededRng) -> Option<(f64, Vec<Point>)> + Sync,
{
    let parts: Vec<Worst> = chunks(samples, CHUNK)
        .into_par_iter()
        .map(|(index, n)| {
            let mut r = rng(derive_seed(seed, index));
            let mut w = Worst::default();
            for _ in 0..n {
                if let Some((s, wit)) = draw(&mut r) {
                    w.push(s, || wit);
                }
            }
            w
        })
        .collect();
    parts.into_iter().fold(Worst::default(), Worst::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn sampled_run_is_deterministic() {
        let f = |r: &mut SeededRng| {
            let x: f64 = r.gen();
            (x > 0.1).then(|| (x, vec![Point::new(x, 0.0, 0.0)]))
        };
        let a = run_sampled(10_000, 5, f);
        let b = run_sampled(10_000, 5, f);
        assert_eq!(a.slack, b.slack);
        assert_eq!(a.applicable, b.applicable);
        assert!(a.slack.unwrap() > 0.1);
        assert!(a.applicable < 10_000);
    }

    #[test]
    fn nan_is_worst() {
        let mut w = Worst::default();
        w.push(1.0, Vec::new);
        w.push(f64::NAN, Vec::new);
        w.push(-5.0, Vec::new);
        assert!(w.slack.unwrap().is_nan());
    }

    #[test]
    fn json_keys_sorted() {
        let r = Report::new("x", 1).param("b", 2.0).param("a", 1.0);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
    }
}
