//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_8, PI};
use std::time::{Duration, Instant};

use heisenberg_bcp::axioms::{verify_a_poly, verify_closed_form, verify_metric_axioms, Axiom};
use heisenberg_bcp::chain::{
    build_chain_counterexample, verify_chain_metric, verify_equivalentdist, verify_isolatedpoint, ChainSpace,
    LineSequence,
};
use heisenberg_bcp::covering::{
    ingoing_corner_family, outgoing_corner_family, reduce_family, search_max_family, verify_family, BesicovitchFamily,
    IngoingParams, OutgoingParams,
};
use heisenberg_bcp::group::{dilate, multiply};
use heisenberg_bcp::lemmas::verify_sev1;
use heisenberg_bcp::metrics::{derived_constants, distance_by_bisection};
use heisenberg_bcp::regions::Region;
use heisenberg_bcp::sampling::{derive_seed, log_uniform, rng, uniform_point, unit_vector};
use heisenberg_bcp::{Ball, DistanceModel, Point};
use rand::Rng;

const SEED: u64 = 0xB5C0;

/// Outcome of one criterion: verdict, one-line summary, extra lines and the
/// serialized results compared by the determinism criterion.
struct Outcome {
    pass: bool,
    summary: String,
    notes: Vec<String>,
    bytes: String,
}

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).unwrap()
}

fn c1_axioms() -> Outcome {
    let t = Instant::now();
    let models = [
        DistanceModel::ball_norm(0.5).unwrap(),
        DistanceModel::ball_norm(1.0).unwrap(),
        DistanceModel::ball_norm(2.0).unwrap(),
        DistanceModel::gauge(1.0).unwrap(),
        DistanceModel::gauge(2.0).unwrap(),
    ];
    let mut pass = true;
    let mut bytes = String::new();
    let mut worst_triangle = f64::INFINITY;
    for (i, m) in models.iter().enumerate() {
        let reps = verify_metric_axioms(m, 1_000_000, 10.0, derive_seed(SEED, i as u64)).unwrap();
        for (ax, r) in Axiom::ALL.iter().zip(&reps) {
            pass &= r.pass;
            if *ax == Axiom::Triangle {
                worst_triangle = worst_triangle.min(r.worst_slack.unwrap_or(f64::INFINITY) - 1e-12);
            }
        }
        bytes += &json(&reps);
    }
    let el = t.elapsed();
    pass &= el < Duration::from_secs(60);
    Outcome {
        pass,
        summary: format!(
            "metric axioms, 5 models x 1e6 triples; triangle rel 1e-12, others 1e-9; worst triangle excess {:.3e}; {:.1}s < 60s",
            (-worst_triangle).max(0.0),
            el.as_secs_f64()
        ),
        notes: vec![],
        bytes,
    }
}

fn c2_closed_form() -> Outcome {
    let r = verify_closed_form(2.0, 10_000, 10.0, SEED).unwrap();
    let m = DistanceModel::ball_norm(2.0).unwrap();
    let e = Point::new(0.0, 0.0, 1.0);
    let bis = distance_by_bisection(&m, &Point::ORIGIN, &e, 1e-13).unwrap();
    let cf = m.distance(&Point::ORIGIN, &e);
    let anchor = (bis - FRAC_1_SQRT_2).abs().max((cf - FRAC_1_SQRT_2).abs());
    let gap = 1e-9 - r.worst_slack.unwrap();
    Outcome {
        pass: r.pass && anchor <= 1e-9,
        summary: format!(
            "closed form vs bisection, 1e4 pairs, alpha 2: max gap {gap:.3e} <= 1e-9; anchor d(0,(0,0,1)) = 1/sqrt2 off by {anchor:.1e}"
        ),
        notes: vec![],
        bytes: json(&r) + &json(&[bis, cf]),
    }
}

fn c3_a_poly() -> Outcome {
    let r = verify_a_poly(2.0, 100_000, 10.0, SEED).unwrap();
    let counted = r.applicable.unwrap();
    Outcome {
        pass: r.pass,
        summary: format!(
            "A_p(q) sign vs membership, 1e5 pairs: {} among {counted} pairs outside the 1e-9 band",
            if r.pass {
                "no disagreement".to_string()
            } else {
                format!("disagreement at {:?}", r.witness)
            }
        ),
        notes: vec![],
        bytes: json(&r),
    }
}

fn c4_sev1() -> Outcome {
    let k = derived_constants(2.0).unwrap();
    let expect = (3f64.sqrt() - 1.0) / 2.0;
    let tan_err = (k.theta2.tan() - expect).abs() / expect;
    let r = verify_sev1(2.0, k.theta2, 10_000, SEED).unwrap();
    Outcome {
        pass: r.pass && tan_err <= 1e-15,
        summary: format!(
            "sev1 at alpha 2, theta2 = {:.12}, 1e4 draws: worst slack {:.3e} >= -1e-9; tan theta2 rel err {tan_err:.1e}",
            k.theta2,
            r.worst_slack.unwrap()
        ),
        notes: vec![],
        bytes: json(&r),
    }
}

fn c5_generators() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut bytes = String::new();
    let mut pass = true;
    let mut group = |name: &str, r: heisenberg_bcp::Result<BesicovitchFamily>, want: usize| {
        let ok = match r {
            Ok(f) => {
                let v = verify_family(&f, 0.0).unwrap();
                bytes += &f.to_json();
                let ok = v.pass && v.cardinality == want && v.margins.exclusion_margin.is_some_and(|e| e > 0.0);
                parts.push(format!(
                    "{name} {} margin {:.2e}",
                    v.cardinality,
                    v.margins.exclusion_margin.unwrap()
                ));
                ok
            }
            Err(e) => {
                bytes += &e.to_string();
                parts.push(format!("{name} error ({e})"));
                false
            }
        };
        pass &= ok;
    };
    let bx = DistanceModel::Box;
    group(
        "box-ingoing",
        ingoing_corner_family(bx, 20, &IngoingParams::default_for(&bx)).map(|f| f.family),
        20,
    );
    let g2 = DistanceModel::gauge(2.0).unwrap();
    group(
        "gauge(2)-ingoing",
        ingoing_corner_family(g2, 10, &IngoingParams::default_for(&g2)).map(|f| f.family),
        10,
    );
    group(
        "outgoing(1,2)",
        outgoing_corner_family(20, &OutgoingParams::default()).map(|f| f.family),
        20,
    );

    let s = ChainSpace::line(LineSequence::Harmonic, 40, 0.9).unwrap();
    match build_chain_counterexample(&s, 10) {
        Ok(f) => {
            let v = f.verify(&s).unwrap();
            pass &= v.pass && v.cardinality == 10 && v.exclusion_margin.is_some_and(|e| e > 0.0);
            parts.push(format!("chain 1/n {}", v.cardinality));
            bytes += &f.to_json();
        }
        Err(e) => {
            pass = false;
            parts.push(format!("chain 1/n error ({e})"));
            bytes += &e.to_string();
        }
    }
    let sp = ChainSpace::line(LineSequence::FactorialPair, 11, 0.4).unwrap();
    let note = match build_chain_counterexample(&sp, 10) {
        Ok(f) => {
            let v = f.verify(&sp).unwrap();
            bytes += &f.to_json();
            format!(
                "chain 1/(n!(n+1)!), N 11, c 0.4: K = {} valid {}, exclusion margin {:.2e}",
                v.cardinality,
                v.pass,
                v.exclusion_margin.unwrap()
            )
        }
        Err(e) => format!("chain 1/(n!(n+1)!), N 11, c 0.4: error ({e})"),
    };
    let el = t.elapsed();
    pass &= el < Duration::from_secs(30);
    Outcome {
        pass,
        summary: format!(
            "generators, exclusion margin > 0: {}; {:.1}s < 30s",
            parts.join("; "),
            el.as_secs_f64()
        ),
        notes: vec![note],
        bytes,
    }
}

fn c6_contrast() -> Outcome {
    let m = DistanceModel::ball_norm(2.0).unwrap();
    let mut cards = Vec::new();
    let mut bytes = String::new();
    for scale in [1.0, 1e-2, 1e-4] {
        let r = search_max_family(m, scale, 100_000, SEED).unwrap();
        cards.push(r.cardinality);
        bytes += &json(&r);
    }
    let bx = DistanceModel::Box;
    let boxf = ingoing_corner_family(bx, 20, &IngoingParams::default_for(&bx))
        .unwrap()
        .family;
    let box_ok = verify_family(&boxf, 0.0).unwrap().pass;
    let plateau = cards[0];
    let stable = cards.iter().all(|&c| c == plateau);
    Outcome {
        pass: stable && box_ok && boxf.len() > plateau,
        summary: format!(
            "search ball_norm(2), budget 1e5, scales 1/1e-2/1e-4: cardinalities {cards:?}; box generator {} > {plateau}",
            boxf.len()
        ),
        notes: vec![],
        bytes,
    }
}

fn c7_chain() -> Outcome {
    let s = ChainSpace::line(LineSequence::Harmonic, 40, 0.9).unwrap();
    let eq = verify_equivalentdist(&s);
    let met = verify_chain_metric(&s);
    let iso = verify_isolatedpoint(&s);
    let d = (s.dbar[10][0] - 1.0 / 11.0).abs();
    let pass = s.n0 == 10 && eq.pass && met.pass && iso.pass && d <= 1e-15;
    let mut notes = Vec::new();
    for (seq, n, c) in [
        (LineSequence::Factorial, 22, 0.9),
        (LineSequence::FactorialPair, 11, 0.4),
    ] {
        let t = ChainSpace::line(seq, n, c).unwrap();
        let r = verify_isolatedpoint(&t);
        notes.push(format!(
            "isolatedpoint on {} (N {n}, c {c}): {} pairs, worst slack {:.2e}, pass {}",
            json(&seq),
            r.applicable.unwrap(),
            r.worst_slack.unwrap(),
            r.pass
        ));
    }
    Outcome {
        pass,
        summary: format!(
            "chain 1/n, N 40, c 0.9: n0 {}; equivalentdist {} ({} pairs); metric axioms {} ({} triples); isolatedpoint {} ({} pairs); |dbar(x10, 0) - 1/11| = {d:.1e} <= 1e-15",
            s.n0,
            eq.pass,
            eq.applicable.unwrap(),
            met.pass,
            met.applicable.unwrap(),
            iso.pass,
            iso.applicable.unwrap()
        ),
        notes,
        bytes: json(&[eq, met, iso]) + &s.dbar_csv(),
    }
}

/// Random valid `d_2` family of exactly `k` balls around a random witness.
fn random_family(k: usize, seed: u64) -> BesicovitchFamily {
    let m = DistanceModel::ball_norm(2.0).unwrap();
    for attempt in 0.. {
        let mut r = rng(derive_seed(seed, attempt));
        let w = uniform_point(&mut r, 5.0);
        let scale = log_uniform(&mut r, 1e-2, 1e2);
        let mut balls: Vec<Ball> = Vec::new();
        for _ in 0..20_000 {
            let u = unit_vector(&mut r);
            let s = scale * r.gen_range(0.5..=1.0) / m.norm(&u);
            let c = multiply(&w, &dilate(s, &u).unwrap());
            let rad = m.distance(&c, &w) * (1.0 + r.gen_range(0.0..1e-3));
            let ok = balls.iter().all(|b| {
                m.distance(&b.center, &c) > rad * (1.0 + 1e-9) && m.distance(&c, &b.center) > b.radius * (1.0 + 1e-9)
            });
            if ok {
                balls.push(Ball::new(c, rad, m).unwrap());
                if balls.len() == k {
                    return BesicovitchFamily::from_balls(balls, w).unwrap();
                }
            }
        }
    }
    unreachable!()
}

fn c8_reduction() -> Outcome {
    let cone = Region::c(FRAC_PI_8).unwrap();
    let mut pass = true;
    let mut bytes = String::new();
    let mut worst_ratio: f64 = 0.0;
    let mut failures = 0;
    for i in 0..100u64 {
        let k = 2 + (i % 7) as usize;
        let f = random_family(k, derive_seed(SEED, i));
        let ok = verify_family(&f, 0.0).unwrap().pass
            && match reduce_family(&f, FRAC_PI_8) {
                Ok(red) => {
                    bytes += &json(&red);
                    worst_ratio = worst_ratio.max(red.input_cardinality as f64 / red.cardinality_bound);
                    let bound = 2.0 * (PI / FRAC_PI_8 + 1.0) * red.output_cardinality as f64 + 2.0;
                    let shape = red.family.as_ref().is_none_or(|g| {
                        verify_family(g, 0.0).unwrap().pass
                            && g.witness() == Point::ORIGIN
                            && g.centers().iter().all(|p| p.z <= 0.0 && cone.contains(p))
                    });
                    shape && red.bound_holds && (red.input_cardinality as f64) <= bound
                }
                Err(e) => {
                    bytes += &e.to_string();
                    false
                }
            };
        if !ok {
            failures += 1;
        }
        pass &= ok;
    }
    Outcome {
        pass,
        summary: format!(
            "reduce_family on 100 random ball_norm(2) families, sizes 2-8, theta pi/8: {failures} failures; max Card/bound {worst_ratio:.3}"
        ),
        notes: vec![],
        bytes,
    }
}

type Criterion = fn() -> Outcome;

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("1", c1_axioms),
        ("2", c2_closed_form),
        ("3", c3_a_poly),
        ("4", c4_sev1),
        ("5", c5_generators),
        ("6", c6_contrast),
        ("7", c7_chain),
        ("8", c8_reduction),
    ];
    let mut all = true;
    let mut first = Vec::new();
    for (id, f) in criteria {
        let o = f();
        println!("{} {id}: {}", if o.pass { "PASS" } else { "FAIL" }, o.summary);
        for n in &o.notes {
            println!("       {n}");
        }
        all &= o.pass;
        first.push(o.bytes);
    }
    let differing: Vec<&str> = criteria
        .iter()
        .zip(&first)
        .filter(|((_, f), b)| f().bytes != **b)
        .map(|((id, _), _)| *id)
        .collect();
    let det = differing.is_empty();
    println!(
        "{} 9: determinism, criteria 1-8 rerun with seed {SEED:#x}: {}",
        if det { "PASS" } else { "FAIL" },
        if det {
            "byte-identical".to_string()
        } else {
            format!("differ in {differing:?}")
        }
    );
    all &= det;
    if !all {
        std::process::exit(1);
    }
}
