//! `hbcp`: verification suites, family generators, searches and plotting
//! data for homogeneous distances on the Heisenberg group.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! bad arguments or malformed input.

mod defaults;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heisenberg_bcp::axioms::{verify_a_poly, verify_closed_form, verify_metric_axioms};
use heisenberg_bcp::chain::{
    build_chain_counterexample, verify_chain_metric, verify_equivalentdist, verify_isolatedpoint, verify_monotone,
    ChainFamily, ChainInput, ChainSpace, LineSequence,
};
use heisenberg_bcp::covering::{
    bound_report, ingoing_corner_family, outgoing_corner_family, reduce_family, search_max_family, verify_family,
    BesicovitchFamily, IngoingParams, OutgoingParams,
};
use heisenberg_bcp::lemmas::{
    threshold_search, verify_comparison_sampled, verify_pp, verify_prop1, verify_prop2, verify_prop4, verify_sev1,
    verify_tt, verify_x_axis, verify_x_axis0, verify_z_axis, verify_z_axis0, ThresholdLemma,
};
use heisenberg_bcp::metrics::derived_constants;
use heisenberg_bcp::report::Report;
use heisenberg_bcp::sphere::{section_csv, sphere_section, Plane};
use heisenberg_bcp::DistanceModel;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hbcp", version, about, after_help = defaults::TABLE)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one lemma check, or all of them, and print JSON reports.
    Verify(VerifyArgs),
    /// Build a Besicovitch family and print it as JSON.
    Generate(GenerateArgs),
    /// Randomized search for a large family through the origin.
    Search(SearchArgs),
    /// Check a family JSON file.
    CheckFamily(CheckArgs),
    /// Normalize a family JSON file and report the cardinality bound.
    Reduce(ReduceArgs),
    /// Unit-sphere cross-section as CSV.
    SphereSection(SectionArgs),
    /// Chain-metric matrix of a finite instance as CSV.
    Chain(ChainCmdArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelKind {
    BallNorm,
    Gauge,
    Box,
    KappaGauge,
    Rho,
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long, value_enum, default_value_t = ModelKind::BallNorm)]
    model: ModelKind,
    #[arg(long, default_value_t = defaults::ALPHA)]
    alpha: f64,
    #[arg(long, default_value_t = defaults::KAPPA)]
    kappa: f64,
}

impl ModelArgs {
    fn build(&self) -> Result<DistanceModel, String> {
        let m = match self.model {
            ModelKind::BallNorm => DistanceModel::ball_norm(self.alpha),
            ModelKind::Gauge => DistanceModel::gauge(self.alpha),
            ModelKind::Box => Ok(DistanceModel::Box),
            ModelKind::KappaGauge => DistanceModel::kappa_gauge(self.kappa, self.alpha),
            ModelKind::Rho => Ok(DistanceModel::RhoPseudo),
        };
        m.map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SequenceKind {
    Harmonic,
    Factorial,
    FactorialPair,
}

#[derive(Args)]
struct ChainArgs {
    /// Line sequence `1/n`, `1/n!` or `1/(n!(n+1)!)` accumulating at 0.
    #[arg(long, value_enum, default_value_t = SequenceKind::Harmonic)]
    sequence: SequenceKind,
    #[arg(long, default_value_t = defaults::CHAIN_POINTS)]
    points: usize,
    #[arg(long, default_value_t = defaults::CHAIN_C)]
    c: f64,
    /// Chain input JSON; replaces the three flags above.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl ChainArgs {
    fn space(&self) -> Result<ChainSpace, String> {
        let s = match &self.input {
            Some(p) => ChainInput::from_json(&read(p)?).and_then(ChainInput::into_space),
            None => {
                let seq = match self.sequence {
                    SequenceKind::Harmonic => LineSequence::Harmonic,
                    SequenceKind::Factorial => LineSequence::Factorial,
                    SequenceKind::FactorialPair => LineSequence::FactorialPair,
                };
                ChainSpace::line(seq, self.points, self.c)
            }
        };
        s.map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LemmaId {
    Axioms,
    ClosedForm,
    APoly,
    Pp,
    Tt,
    Sev1,
    XAxis,
    ZAxis,
    #[value(name = "x-axis0")]
    XAxis0,
    #[value(name = "z-axis0")]
    ZAxis0,
    Comparison,
    Prop1,
    Prop2,
    Prop4,
    Thresholds,
    Equivalentdist,
    Distance,
    Isolatedpoint,
    Monotone,
    All,
}

impl LemmaId {
    /// Everything `all` runs; the threshold sweeps are left out.
    const ALL: [LemmaId; 18] = [
        LemmaId::Axioms,
        LemmaId::ClosedForm,
        LemmaId::APoly,
        LemmaId::Pp,
        LemmaId::Tt,
        LemmaId::Sev1,
        LemmaId::XAxis,
        LemmaId::ZAxis,
        LemmaId::XAxis0,
        LemmaId::ZAxis0,
        LemmaId::Comparison,
        LemmaId::Prop1,
        LemmaId::Prop2,
        LemmaId::Prop4,
        LemmaId::Equivalentdist,
        LemmaId::Distance,
        LemmaId::Isolatedpoint,
        LemmaId::Monotone,
    ];
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    #[arg(value_enum)]
    lemma: LemmaId,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = defaults::SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = defaults::SEED, value_parser = parse_seed)]
    seed: u64,
    /// Overrides the lemma's own acceptance threshold.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long, default_value_t = defaults::HALF_WIDTH)]
    half_width: f64,
    #[command(flatten)]
    chain: ChainArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    BoxIngoing,
    GaugeIngoing,
    Outgoing,
    Chain,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct GenerateArgs {
    #[arg(value_enum)]
    generator: Generator,
    /// Number of balls.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = defaults::ALPHA)]
    alpha: f64,
    #[arg(long, default_value_t = defaults::KAPPA)]
    kappa: f64,
    #[command(flatten)]
    chain: ChainArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SearchArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = defaults::SCALE)]
    scale: f64,
    #[arg(long, default_value_t = defaults::BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = defaults::SEED, value_parser = parse_seed)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct CheckArgs {
    path: PathBuf,
    /// Required exclusion margin.
    #[arg(long, default_value_t = defaults::FAMILY_TOL)]
    tol: f64,
    /// Space for chain families.
    #[command(flatten)]
    chain: ChainArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ReduceArgs {
    path: PathBuf,
    #[arg(long, default_value_t = defaults::REDUCE_THETA)]
    theta: f64,
    /// With `--b`, also evaluate the cardinality bound.
    #[arg(long, requires = "b")]
    a: Option<f64>,
    #[arg(long, requires = "a")]
    b: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SectionArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value = "xz", value_parser = parse_plane)]
    plane: Plane,
    #[arg(long, default_value_t = defaults::RESOLUTION)]
    resolution: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ChainCmdArgs {
    #[command(flatten)]
    chain: ChainArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(h, 16),
        None => s.parse(),
    };
    r.map_err(|e| e.to_string())
}

fn parse_plane(s: &str) -> Result<Plane, String> {
    s.parse().map_err(|e: heisenberg_bcp::Error| e.to_string())
}

fn read(p: &Path) -> Result<String, String> {
    fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn status(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_lemma(id: LemmaId, v: &VerifyArgs) -> heisenberg_bcp::Result<Vec<Report>> {
    let (n, seed, alpha) = (v.samples, v.seed, v.model.alpha);
    let theta = |d: f64| v.theta.unwrap_or(d);
    let a = |d: f64| v.a.unwrap_or(d);
    let b = |d: f64| v.b.unwrap_or(d);
    let (xt, xa, xb) = defaults::X_AXIS;
    let (za, zb) = defaults::Z_AXIS;
    let one = |r: heisenberg_bcp::Result<Report>| r.map(|r| vec![r]);
    let chain = || v.chain.space().map_err(heisenberg_bcp::Error::Parse);
    match id {
        LemmaId::Axioms => {
            let m = v.model.build().map_err(heisenberg_bcp::Error::Parse)?;
            verify_metric_axioms(&m, n, v.half_width, seed)
        }
        LemmaId::ClosedForm => one(verify_closed_form(alpha, n, v.half_width, seed)),
        LemmaId::APoly => one(verify_a_poly(alpha, n, v.half_width, seed)),
        LemmaId::Pp => one(verify_pp(
            alpha,
            a(defaults::PP.0),
            b(defaults::PP.1),
            theta(defaults::PP.2),
            n,
            seed,
        )),
        LemmaId::Tt => one(verify_tt(alpha, a(defaults::TT.0), b(defaults::TT.1), n, seed)),
        LemmaId::Sev1 => {
            let t2 = derived_constants(alpha)?.theta2;
            one(verify_sev1(alpha, theta(t2), n, seed))
        }
        LemmaId::XAxis => one(verify_x_axis(alpha, theta(xt), a(xa), b(xb), n, seed)),
        LemmaId::ZAxis => one(verify_z_axis(alpha, a(za), b(zb), n, seed)),
        LemmaId::XAxis0 => one(verify_x_axis0(alpha, theta(xt), a(xa), b(xb), n, seed)),
        LemmaId::ZAxis0 => one(verify_z_axis0(alpha, a(za), b(zb), n, seed)),
        LemmaId::Comparison => one(verify_comparison_sampled(
            alpha,
            theta(defaults::COMPARISON_THETA),
            n,
            seed,
        )),
        LemmaId::Prop1 => one(verify_prop1(theta(defaults::CONE_THETA), n, seed)),
        LemmaId::Prop2 => one(verify_prop2(theta(defaults::CONE_THETA), n, seed)),
        LemmaId::Prop4 => one(verify_prop4(theta(defaults::CONE_THETA), n, seed)),
        LemmaId::Equivalentdist => Ok(vec![verify_equivalentdist(&chain()?)]),
        LemmaId::Distance => Ok(vec![verify_chain_metric(&chain()?)]),
        LemmaId::Isolatedpoint => Ok(vec![verify_isolatedpoint(&chain()?)]),
        LemmaId::Monotone => one(verify_monotone(&chain()?)),
        LemmaId::Thresholds | LemmaId::All => unreachable!("handled by the caller"),
    }
}

fn apply_tol(r: &mut Report, tol: Option<f64>) {
    if let Some(t) = tol {
        r.pass = r.worst_slack.is_none_or(|s| s >= -t);
    }
}

fn cmd_verify(v: &VerifyArgs) -> Result<ExitCode, String> {
    let mut out: Vec<Value> = Vec::new();
    let mut pass = true;
    if v.lemma == LemmaId::Thresholds {
        for lemma in [
            ThresholdLemma::XAxis0,
            ThresholdLemma::ZAxis0,
            ThresholdLemma::ComparisonInCone,
        ] {
            match threshold_search(v.model.alpha, lemma, v.samples, v.seed) {
                Ok(t) => out.push(serde_json::to_value(&t).expect("thresholds serialize")),
                Err(e) => {
                    pass = false;
                    out.push(json!({ "lemma": lemma, "pass": false, "error": e.to_string() }));
                }
            }
        }
    } else {
        let ids: Vec<LemmaId> = if v.lemma == LemmaId::All {
            LemmaId::ALL.to_vec()
        } else {
            vec![v.lemma]
        };
        for id in ids {
            for mut r in run_lemma(id, v).map_err(|e| e.to_string())? {
                apply_tol(&mut r, v.tol);
                pass &= r.pass;
                out.push(serde_json::to_value(&r).expect("report serializes"));
            }
        }
    }
    emit(&v.out, &pretty(&out))?;
    Ok(status(pass))
}

fn cmd_generate(g: &GenerateArgs) -> Result<ExitCode, String> {
    match generate(g) {
        Err(Failure::Check(e)) => {
            eprintln!("generation failed: {e}");
            Ok(ExitCode::from(1))
        }
        Err(Failure::Input(e)) => Err(e),
        Ok(code) => Ok(code),
    }
}

enum Failure {
    /// The construction ran and could not produce a valid family.
    Check(String),
    Input(String),
}

impl From<heisenberg_bcp::Error> for Failure {
    fn from(e: heisenberg_bcp::Error) -> Self {
        use heisenberg_bcp::Error as E;
        match e {
            E::Construction { .. } | E::InsufficientDepth { .. } | E::InvalidFamily(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Input(e)
    }
}

fn generate(g: &GenerateArgs) -> Result<ExitCode, Failure> {
    let (text, summary) = match g.generator {
        Generator::BoxIngoing | Generator::GaugeIngoing => {
            let (model, n) = match g.generator {
                Generator::BoxIngoing => (DistanceModel::Box, g.n.unwrap_or(defaults::BOX_N)),
                _ => (DistanceModel::gauge(g.alpha)?, g.n.unwrap_or(defaults::GAUGE_N)),
            };
            let f = ingoing_corner_family(model, n, &IngoingParams::default_for(&model))?;
            let v = verify_family(&f.family, 0.0)?;
            (f.family.to_json(), (v.cardinality, v.margins.exclusion_margin, v.pass))
        }
        Generator::Outgoing => {
            let p = OutgoingParams {
                kappa: g.kappa,
                alpha: g.alpha,
                ..OutgoingParams::default()
            };
            let f = outgoing_corner_family(g.n.unwrap_or(defaults::OUTGOING_N), &p)?;
            let v = verify_family(&f.family, 0.0)?;
            (f.family.to_json(), (v.cardinality, v.margins.exclusion_margin, v.pass))
        }
        Generator::Chain => {
            let s = g.chain.space()?;
            let f = build_chain_counterexample(&s, g.n.unwrap_or(defaults::CHAIN_K))?;
            let v = f.verify(&s)?;
            (f.to_json(), (v.cardinality, v.exclusion_margin, v.pass))
        }
    };
    emit(&g.out, &text)?;
    let (card, margin, pass) = summary;
    eprintln!("cardinality {card}, exclusion margin {margin:?}, pass {pass}");
    Ok(status(pass))
}

fn cmd_search(s: &SearchArgs) -> Result<ExitCode, String> {
    let model = s.model.build()?;
    let r = search_max_family(model, s.scale, s.budget, s.seed).map_err(|e| e.to_string())?;
    let pass = verify_family(&r.family, 0.0).map_err(|e| e.to_string())?.pass;
    emit(&s.out, &pretty(&r))?;
    Ok(status(pass))
}

fn cmd_check(c: &CheckArgs) -> Result<ExitCode, String> {
    let text = read(&c.path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", c.path.display()))?;
    let (report, pass) = if v.get("model").and_then(Value::as_str) == Some("chain") {
        let f = ChainFamily::from_json(&text).map_err(|e| e.to_string())?;
        let mut r = f.verify(&c.chain.space()?).map_err(|e| e.to_string())?;
        r.pass &= r.exclusion_margin.is_none_or(|e| e > c.tol);
        (pretty(&r), r.pass)
    } else {
        let f = BesicovitchFamily::from_json(&text).map_err(|e| e.to_string())?;
        let r = verify_family(&f, c.tol).map_err(|e| e.to_string())?;
        (pretty(&r), r.pass)
    };
    emit(&c.out, &report)?;
    Ok(status(pass))
}

fn cmd_reduce(r: &ReduceArgs) -> Result<ExitCode, String> {
    let err = |e: heisenberg_bcp::Error| e.to_string();
    let f = BesicovitchFamily::from_json(&read(&r.path)?).map_err(err)?;
    let red = reduce_family(&f, r.theta).map_err(err)?;
    let mut pass = red.bound_holds;
    let mut out = json!({ "reduction": red });
    if let (Some(a), Some(b), Some(g)) = (r.a, r.b, &red.family) {
        let br = bound_report(g, r.theta, a, b).map_err(err)?;
        pass &= br.holds;
        out["bound"] = serde_json::to_value(&br).expect("bound serializes");
    }
    emit(&r.out, &pretty(&out))?;
    Ok(status(pass))
}

fn cmd_section(s: &SectionArgs) -> Result<ExitCode, String> {
    let m = s.model.build()?;
    let rows = sphere_section(&m, s.plane, s.resolution).map_err(|e| e.to_string())?;
    emit(&s.out, &section_csv(&rows, s.plane))?;
    Ok(status(rows.iter().all(|r| r.z_plus.is_some() && r.z_minus.is_some())))
}

fn cmd_chain(c: &ChainCmdArgs) -> Result<ExitCode, String> {
    let s = c.chain.space()?;
    emit(&c.out, &s.dbar_csv())?;
    eprintln!("points {}, n0 {}, depth {}", s.len(), s.n0, s.depth());
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.cmd {
        Cmd::Verify(v) => cmd_verify(v),
        Cmd::Generate(g) => cmd_generate(g),
        Cmd::Search(s) => cmd_search(s),
        Cmd::CheckFamily(c) => cmd_check(c),
        Cmd::Reduce(r) => cmd_reduce(r),
        Cmd::SphereSection(s) => cmd_section(s),
        Cmd::Chain(c) => cmd_chain(c),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
