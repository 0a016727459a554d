//! Chain-infimum metrics on a finite sequence with an accumulation point.
//!
//! Index 0 is the limit `x̄`; indices `1..=N` are the sequence `x_n`. Edges
//! `(x̄, x_n)` with `n ≥ n0` are shortened to `ρ_n = n/(n+1)·d(x_n, x̄)` and
//! `d̄` is the shortest-path metric of the resulting weights.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::report::Report;

/// Tolerance for the metric axioms of the base distance, relative to the
/// largest entry involved.
pub const METRIC_TOL: f64 = 1e-12;

/// Built-in sequences on the real line with limit 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineSequence {
    #[serde(rename = "1/n")]
    Harmonic,
    #[serde(rename = "1/n!")]
    Factorial,
    #[serde(rename = "1/(n!(n+1)!)")]
    FactorialPair,
}

impl LineSequence {
    pub fn term(&self, n: usize) -> f64 {
        match self {
            LineSequence::Harmonic => 1.0 / n as f64,
            LineSequence::Factorial => 1.0 / factorial(n),
            LineSequence::FactorialPair => 1.0 / (factorial(n) * factorial(n + 1)),
        }
    }

    /// `|x_i − x_j|` on `0, x_1, …, x_N`.
    pub fn matrix(&self, n: usize) -> Vec<Vec<f64>> {
        let x: Vec<f64> = std::iter::once(0.0).chain((1..=n).map(|k| self.term(k))).collect();
        x.iter().map(|a| x.iter().map(|b| (a - b).abs()).collect()).collect()
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// JSON input: either an explicit matrix or a built-in line sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainInput {
    #[serde(default = "default_c")]
    pub c: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_sequence: Option<LineInput>,
}

fn default_c() -> f64 {
    0.9
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseMatrix {
    pub points: usize,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineInput {
    pub xn: LineSequence,
    #[serde(rename = "N")]
    pub n: usize,
}

impl ChainInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn into_space(self) -> Result<ChainSpace> {
        match (self.base, self.line_sequence) {
            (Some(b), None) => {
                if b.matrix.len() != b.points {
                    return Err(Error::InvalidBaseMetric(format!(
                        "declared {} points, matrix has {} rows",
                        b.points,
                        b.matrix.len()
                    )));
                }
                ChainSpace::new(b.matrix, self.c)
            }
            (None, Some(l)) => ChainSpace::line(l.xn, l.n, self.c),
            _ => Err(Error::Parse(
                "need exactly one of \"base\" and \"line_sequence\"".into(),
            )),
        }
    }
}

/// Smallest `n ≥ 1` with `c(n+1) < n`.
pub fn n0_for(c: f64) -> Result<usize> {
    if !(c > 0.0 && c < 1.0) {
        return Err(invalid("c", format!("must lie in (0, 1), got {c}")));
    }
    let mut n = (c / (1.0 - c)).floor().max(1.0) as usize;
    while n > 1 && c * n as f64 >= (n - 1) as f64 {
        n -= 1;
    }
    while c * (n + 1) as f64 >= n as f64 {
        n += 1;
    }
    Ok(n)
}

fn validate_metric(d: &[Vec<f64>]) -> Result<()> {
    let m = d.len();
    if m < 2 {
        return Err(Error::InvalidBaseMetric("need at least two points".into()));
    }
    for (i, row) in d.iter().enumerate() {
        if row.len() != m {
            return Err(Error::InvalidBaseMetric(format!("row {i} has {} entries", row.len())));
        }
        for (j, &v) in row.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidBaseMetric(format!("entry ({i}, {j}) is not finite")));
            }
            if v != d[j][i] {
                return Err(Error::InvalidBaseMetric(format!("not symmetric at ({i}, {j})")));
            }
            if i == j && v != 0.0 {
                return Err(Error::InvalidBaseMetric(format!("nonzero diagonal at {i}")));
            }
            if i != j && !(v > 0.0) {
                return Err(Error::InvalidBaseMetric(format!("entry ({i}, {j}) is not positive")));
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let rhs = d[i][k] + d[k][j];
                if d[i][j] > rhs + METRIC_TOL * d[i][j].max(rhs) {
                    return Err(Error::InvalidBaseMetric(format!(
                        "triangle inequality fails for ({i}, {k}, {j})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// All-pairs shortest paths.
fn floyd_warshall(w: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut d = w.to_vec();
    let m = d.len();
    for k in 0..m {
        for i in 0..m {
            let dik = d[i][k];
            let via = d[k].clone();
            for (dij, dkj) in d[i].iter_mut().zip(via) {
                let v = dik + dkj;
                if v < *dij {
                    *dij = v;
                }
            }
        }
    }
    d
}

/// Finite truncation with `ρ_n` strictly decreasing and the chain metric.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpace {
    /// Input index of each point; `labels[0] = 0`.
    pub labels: Vec<usize>,
    pub base: Vec<Vec<f64>>,
    pub c: f64,
    pub n0: usize,
    /// `rho[n]` for `n ≥ 1`; `rho[0]` is unused and set to 0.
    pub rho: Vec<f64>,
    pub dbar: Vec<Vec<f64>>,
}

impl ChainSpace {
    /// Validates the base metric, keeps the longest greedy run of sequence
    /// points along which `ρ_n` strictly decreases, and computes `d̄`.
    pub fn new(base: Vec<Vec<f64>>, c: f64) -> Result<Self> {
        let n0 = n0_for(c)?;
        validate_metric(&base)?;
        let mut labels = vec![0];
        let mut rho = vec![0.0];
        for (i, row) in base.iter().enumerate().skip(1) {
            let n = labels.len() as f64;
            let r = n / (n + 1.0) * row[0];
            if rho.len() == 1 || r < *rho.last().unwrap() {
                labels.push(i);
                rho.push(r);
            }
        }
        let sub: Vec<Vec<f64>> = labels
            .iter()
            .map(|&i| labels.iter().map(|&j| base[i][j]).collect())
            .collect();
        let mut space = ChainSpace {
            labels,
            base: sub,
            c,
            n0,
            rho,
            dbar: Vec::new(),
        };
        let w = space.weights();
        space.dbar = floyd_warshall(&w);
        Ok(space)
    }

    pub fn line(seq: LineSequence, n: usize, c: f64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("N", "need N ≥ 1"));
        }
        Self::new(seq.matrix(n), c)
    }

    /// Number of points including `x̄`.
    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Sequence depth `N`.
    pub fn depth(&self) -> usize {
        self.base.len() - 1
    }

    pub fn theta_weight(&self, i: usize, j: usize) -> f64 {
        match (i, j) {
            (0, n) | (n, 0) if n >= self.n0 => self.rho[n],
            _ => self.base[i][j],
        }
    }

    fn weights(&self) -> Vec<Vec<f64>> {
        let m = self.len();
        (0..m)
            .map(|i| (0..m).map(|j| self.theta_weight(i, j)).collect())
            .collect()
    }

    /// The first `m` points (including `x̄`) with their own chain metric.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m < 2 || m > self.len() {
            return Err(invalid("m", format!("must lie in [2, {}]", self.len())));
        }
        let base = self.base[..m].iter().map(|r| r[..m].to_vec()).collect();
        let mut t = ChainSpace::new(base, self.c)?;
        t.labels = t.labels.iter().map(|&i| self.labels[i]).collect();
        Ok(t)
    }

    pub fn dbar_csv(&self) -> String {
        let mut s = String::new();
        for row in &self.dbar {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:e}")).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    /// Greedy indices `n_0 < n_1 < …` with `n_k ≥ n0` and
    /// `d(x̄, x_{n_k}) < ρ_{n_j}/(n_j(n_j+1))` for all `j < k`.
    pub fn extract(&self, k: usize) -> Result<Vec<usize>> {
        let mut picked: Vec<usize> = Vec::with_capacity(k);
        let mut bound = f64::INFINITY;
        for n in self.n0..self.len() {
            if picked.len() == k {
                break;
            }
            if self.base[n][0] < bound {
                picked.push(n);
                let nf = n as f64;
                bound = bound.min(self.rho[n] / (nf * (nf + 1.0)));
            }
        }
        if picked.len() < k {
            return Err(Error::InsufficientDepth {
                k: picked.len(),
                depth: self.depth(),
            });
        }
        Ok(picked)
    }
}

/// Abstract ball family in `(X, d̄)`; centers are point indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFamily {
    pub model: String,
    pub witness: usize,
    pub balls: Vec<ChainBall>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainBall {
    pub center: usize,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainFamilyReport {
    pub cardinality: usize,
    pub exclusion_margin: Option<f64>,
    pub witness_margin: f64,
    pub pass: bool,
}

impl ChainFamily {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: ChainFamily = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if f.model != "chain" {
            return Err(Error::Parse(format!("expected model \"chain\", got {:?}", f.model)));
        }
        Ok(f)
    }

    /// Same conditions as for group families, evaluated on the `d̄` matrix.
    pub fn verify(&self, s: &ChainSpace) -> Result<ChainFamilyReport> {
        let n = s.len();
        if let Some(b) = self.balls.iter().find(|b| b.center >= n || !b.radius.is_finite()) {
            return Err(Error::InvalidFamily(format!(
                "ball {b:?} does not fit a space of {n} points"
            )));
        }
        if self.witness >= n {
            return Err(Error::InvalidFamily(format!("witness {} out of range", self.witness)));
        }
        let d = &s.dbar;
        let mut ex: Option<f64> = None;
        for a in &self.balls {
            for b in &self.balls {
                if a.center != b.center {
                    let m = d[a.center][b.center] - b.radius;
                    ex = Some(ex.map_or(m, |e| e.min(m)));
                }
            }
        }
        let wm = self
            .balls
            .iter()
            .map(|b| b.radius - d[b.center][self.witness])
            .fold(f64::INFINITY, f64::min);
        Ok(ChainFamilyReport {
            cardinality: self.balls.len(),
            exclusion_margin: ex,
            witness_margin: wm,
            pass: !self.balls.is_empty() && ex.is_none_or(|e| e > 0.0) && wm >= -1e-12,
        })
    }
}

/// Balls `B_d̄(x_{n_k}, ρ_{n_k})`, `k < K`, with witness `x̄`.
pub fn build_chain_counterexample(s: &ChainSpace, k: usize) -> Result<ChainFamily> {
    if k == 0 {
        return Err(invalid("K", "need K ≥ 1"));
    }
    let idx = s.extract(k)?;
    let f = ChainFamily {
        model: "chain".into(),
        witness: 0,
        balls: idx
            .iter()
            .map(|&n| ChainBall {
                center: n,
                radius: s.rho[n],
            })
            .collect(),
    };
    let v = f.verify(s)?;
    if !v.pass {
        return Err(Error::InvalidFamily(format!("chain family fails: {v:?}")));
    }
    Ok(f)
}

fn pair_report(name: &str, s: &ChainSpace, worst: Option<(f64, usize, usize)>, applicable: usize) -> Report {
    let mut r = Report::new(name, 0).param("c", s.c).param("n0", s.n0 as f64);
    r.samples = applicable;
    r.applicable = Some(applicable);
    r.worst_slack = worst.map(|w| w.0);
    r.pass = worst.is_none_or(|w| w.0 >= 0.0);
    r.detail = worst.map(|(_, i, j)| format!("pair ({i}, {j})"));
    r
}

fn track(worst: &mut Option<(f64, usize, usize)>, v: f64, i: usize, j: usize) {
    if worst.is_none_or(|w| v < w.0 || v.is_nan()) {
        *worst = Some((v, i, j));
    }
}

/// `c·d ≤ d̄ ≤ d` on every pair, with relative tolerance `1e-12`.
pub fn verify_equivalentdist(s: &ChainSpace) -> Report {
    let mut worst = None;
    let mut count = 0;
    for i in 0..s.len() {
        for j in 0..s.len() {
            let (d, db) = (s.base[i][j], s.dbar[i][j]);
            let tol = METRIC_TOL * d;
            let slack = (db - s.c * d + tol).min(d - db + tol);
            track(&mut worst, slack, i, j);
            count += 1;
        }
    }
    pair_report("equivalentdist", s, worst, count)
}

/// Symmetry, positivity off the diagonal and the triangle inequality for `d̄`.
pub fn verify_chain_metric(s: &ChainSpace) -> Report {
    let d = &s.dbar;
    let m = s.len();
    let mut worst = None;
    let mut count = 0;
    for i in 0..m {
        for j in 0..m {
            let sym = -(d[i][j] - d[j][i]).abs();
            let pos = if i == j { -d[i][j].abs() } else { d[i][j] };
            track(&mut worst, sym.min(pos), i, j);
            for k in 0..m {
                let rhs = d[i][k] + d[k][j];
                track(&mut worst, rhs - d[i][j] + METRIC_TOL * rhs, i, j);
                count += 1;
            }
        }
    }
    pair_report("distance", s, worst, count)
}

/// `d̄(x_n, y) > ρ_n` whenever `n ≥ n0` and `0 < d(x̄, y) < ρ_n/(n(n+1))`.
pub fn verify_isolatedpoint(s: &ChainSpace) -> Report {
    let mut worst = None;
    let mut count = 0;
    for n in s.n0..s.len() {
        let nf = n as f64;
        let r = s.rho[n] / (nf * (nf + 1.0));
        for y in 1..s.len() {
            let dy = s.base[0][y];
            if dy > 0.0 && dy < r {
                track(&mut worst, s.dbar[n][y] - s.rho[n], n, y);
                count += 1;
            }
        }
    }
    let mut rep = pair_report("isolatedpoint", s, worst, count);
    rep.pass = worst.is_none_or(|w| w.0 > 0.0);
    rep
}

/// Enlarging the point set never increases `d̄` on the smaller set.
pub fn verify_monotone(s: &ChainSpace) -> Result<Report> {
    let mut worst = None;
    let mut count = 0;
    for m in 2..s.len() {
        let t = s.truncate(m)?;
        if t.labels != s.labels[..m] {
            continue;
        }
        for i in 0..m {
            for j in 0..m {
                let v = t.dbar[i][j] - s.dbar[i][j];
                track(&mut worst, v + METRIC_TOL * t.dbar[i][j], i, j);
                count += 1;
            }
        }
    }
    Ok(pair_report("monotone", s, worst, count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn harmonic() -> ChainSpace {
        ChainSpace::line(LineSequence::Harmonic, 40, 0.9).unwrap()
    }

    /// Plain Dijkstra on the θ weights as an independent shortest-path oracle.
    fn dijkstra(s: &ChainSpace, src: usize) -> Vec<f64> {
        let m = s.len();
        let mut dist = vec![f64::INFINITY; m];
        let mut done = vec![false; m];
        dist[src] = 0.0;
        for _ in 0..m {
            let u = (0..m)
                .filter(|&v| !done[v])
                .min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
                .unwrap();
            done[u] = true;
            for v in 0..m {
                let alt = dist[u] + s.theta_weight(u, v);
                if alt < dist[v] {
                    dist[v] = alt;
                }
            }
        }
        dist
    }

    #[test]
    fn n0_scan() {
        assert_eq!(n0_for(0.9).unwrap(), 10);
        assert_eq!(n0_for(0.5).unwrap(), 2);
        assert_eq!(n0_for(0.1).unwrap(), 1);
        for c in [0.3, 0.75, 0.99, 0.999] {
            let n = n0_for(c).unwrap();
            assert!(c * ((n + 1) as f64) < n as f64);
            assert!(n == 1 || c * n as f64 >= (n - 1) as f64);
        }
        assert!(n0_for(1.0).is_err());
    }

    #[test]
    fn theta_case_split() {
        let s = harmonic();
        assert_eq!(s.n0, 10);
        assert_eq!(s.theta_weight(0, 12), s.rho[12]);
        assert_eq!(s.theta_weight(12, 0), 12.0 / 13.0 * (1.0 / 12.0));
        assert_eq!(s.theta_weight(3, 7), (1.0f64 / 3.0 - 1.0 / 7.0).abs());
        assert_eq!(s.theta_weight(0, 9), 1.0 / 9.0);
    }

    #[test]
    fn dbar_matches_oracle() {
        let s = harmonic();
        assert!((s.dbar[10][0] - 1.0 / 11.0).abs() < 1e-15);
        for src in [0, 1, 10, 25, 40] {
            let d = dijkstra(&s, src);
            for (a, b) in d.iter().zip(&s.dbar[src]) {
                assert!((a - b).abs() <= 1e-15 * a.max(1.0));
            }
        }
        for i in 0..s.len() {
            assert_eq!(s.dbar[i][i], 0.0);
            for j in 0..s.len() {
                assert_eq!(s.dbar[i][j], s.dbar[j][i]);
            }
        }
    }

    #[test]
    fn lemmas_hold_on_line_instances() {
        for s in [
            harmonic(),
            ChainSpace::line(LineSequence::Factorial, 22, 0.9).unwrap(),
            ChainSpace::line(LineSequence::FactorialPair, 11, 0.4).unwrap(),
        ] {
            for r in [
                verify_equivalentdist(&s),
                verify_chain_metric(&s),
                verify_isolatedpoint(&s),
            ] {
                assert!(r.pass, "{r:?}");
            }
            assert!(verify_monotone(&s).unwrap().pass);
        }
    }

    #[test]
    fn harmonic_depth_allows_one_ball() {
        let s = harmonic();
        let f = build_chain_counterexample(&s, 1).unwrap();
        assert_eq!(
            f.balls,
            vec![ChainBall {
                center: 10,
                radius: s.rho[10]
            }]
        );
        assert!(f.verify(&s).unwrap().pass);
        // The second index would need 1/n < 1/(10·11²).
        assert_eq!(
            build_chain_counterexample(&s, 3),
            Err(Error::InsufficientDepth { k: 1, depth: 40 })
        );
    }

    #[test]
    fn family_json_round_trip() {
        let s = harmonic();
        let f = build_chain_counterexample(&s, 1).unwrap();
        let g = ChainFamily::from_json(&f.to_json()).unwrap();
        assert_eq!(f, g);
        let bad = ChainFamily {
            witness: 41,
            ..g.clone()
        };
        assert!(bad.verify(&s).is_err());
        assert!(ChainFamily::from_json(&f.to_json().replace("\"chain\"", "\"box\"")).is_err());
    }

    #[test]
    fn factorial_sequence_depth() {
        let s = ChainSpace::line(LineSequence::Factorial, 22, 0.9).unwrap();
        let f = build_chain_counterexample(&s, 7).unwrap();
        let centers: Vec<usize> = f.balls.iter().map(|b| b.center).collect();
        assert_eq!(centers, (10..=22).step_by(2).collect::<Vec<_>>());
        // Beyond ρ_{n_k}/ρ_{n_0} ≈ 1e-16 the exclusion margin rounds to zero.
        let t = ChainSpace::line(LineSequence::Factorial, 30, 0.9).unwrap();
        assert!(matches!(
            build_chain_counterexample(&t, 8),
            Err(Error::InvalidFamily(_))
        ));
    }

    #[test]
    fn factorial_pair_sequence_reaches_ten() {
        let s = ChainSpace::line(LineSequence::FactorialPair, 11, 0.4).unwrap();
        assert_eq!(s.n0, 1);
        let f = build_chain_counterexample(&s, 10).unwrap();
        let centers: Vec<usize> = f.balls.iter().map(|b| b.center).collect();
        assert_eq!(centers, (1..=10).collect::<Vec<_>>());
        let v = f.verify(&s).unwrap();
        assert!(v.pass && v.exclusion_margin.unwrap() > 0.0, "{v:?}");
        assert!(f.to_json().contains("\"model\": \"chain\""));
    }

    #[test]
    fn reindexing_enforces_decreasing_rho() {
        // x_1 = 1, x_2 = 3 (farther), x_3 = 0.5.
        let x = [0.0f64, 1.0, 3.0, 0.5];
        let m: Vec<Vec<f64>> = x.iter().map(|a| x.iter().map(|b| (a - b).abs()).collect()).collect();
        let s = ChainSpace::new(m, 0.5).unwrap();
        assert_eq!(s.labels, vec![0, 1, 3]);
        assert!(s.rho[1] > s.rho[2]);
    }

    #[test]
    fn bad_inputs() {
        let bad = vec![vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]];
        assert!(matches!(ChainSpace::new(bad, 0.9), Err(Error::InvalidBaseMetric(_))));
        let asym = vec![vec![0.0, 1.0], vec![2.0, 0.0]];
        assert!(ChainSpace::new(asym, 0.9).is_err());
        let zero = vec![vec![0.0, 0.0], vec![0.0, 0.0]];
        assert!(ChainSpace::new(zero, 0.9).is_err());
        assert!(ChainInput::from_json(r#"{"c":0.9}"#).unwrap().into_space().is_err());
        let s = ChainInput::from_json(r#"{"line_sequence":{"xn":"1/n","N":40}}"#)
            .unwrap()
            .into_space()
            .unwrap();
        assert_eq!(s, harmonic());
        let t = ChainInput::from_json(r#"{"c":0.9,"base":{"points":2,"matrix":[[0,1],[1,0]]}}"#)
            .unwrap()
            .into_space()
            .unwrap();
        assert_eq!(t.depth(), 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn random_line_sets_satisfy_lemmas(
            xs in proptest::collection::vec(1e-6f64..10.0, 2..24),
            c in 0.05f64..0.95,
        ) {
            let mut pts = vec![0.0];
            pts.extend(xs);
            let m: Vec<Vec<f64>> = pts.iter().map(|a| pts.iter().map(|b| (a - b).abs()).collect()).collect();
            prop_assume!(m.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, v)| i == j || *v > 0.0)));
            let s = ChainSpace::new(m, c).unwrap();
            for w in s.rho[1..].windows(2) {
                prop_assert!(w[1] < w[0]);
            }
            prop_assert!(verify_equivalentdist(&s).pass);
            prop_assert!(verify_chain_metric(&s).pass);
            prop_assert!(verify_isolatedpoint(&s).pass);
            prop_assert!(verify_monotone(&s).unwrap().pass);
        }
    }
}
