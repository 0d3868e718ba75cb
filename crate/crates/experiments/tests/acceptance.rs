//! Acceptance criteria 1-12. Each test prints one `criterion NN PASS|FAIL`
//! line to the real stdout (not captured by the harness) and then asserts.
//! Statistical parameters come from `config/acceptance.toml`.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;
use std::time::{Duration, Instant};

use rskdyn_core::equivalence::first_shape_disagreement;
use rskdyn_core::{
    enumerate_coplactic_class, enumerate_plactic_class, eta_equivalent_binary, rank, rsk, rsk_inverse,
    semistandard_tableaux, standard_tableaux, validate, xi_equivalent_binary, Alphabet, Shape, TableauKind,
    TruncatedPoint, Word,
};
use rskdyn_experiments::{run, ExperimentConfig, ExperimentReport, PartialConfig, Verdict};
use serde_json::Value;

fn table() -> toml::Table {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/config/acceptance.toml");
    std::fs::read_to_string(path).unwrap().parse().unwrap()
}

fn section(name: &str) -> ExperimentConfig {
    let value = table()
        .remove(name)
        .unwrap_or_else(|| panic!("no [{name}] in acceptance.toml"));
    let partial: PartialConfig = value.try_into().unwrap();
    partial.resolve().unwrap()
}

fn line(criterion: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "criterion {criterion:>2} {verdict} {detail}").unwrap();
    out.flush().unwrap();
}

fn simulate(cfg: &ExperimentConfig) -> ExperimentReport {
    run(cfg, 0).unwrap()
}

fn stat<'a>(report: &'a ExperimentReport, path: &[&str]) -> &'a Value {
    path.iter().fold(&report.statistics, |v, key| &v[*key])
}

fn f64_at(report: &ExperimentReport, path: &[&str]) -> f64 {
    stat(report, path)
        .as_f64()
        .unwrap_or_else(|| panic!("no number at {path:?}"))
}

#[test]
fn criterion_01_round_trip() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut ok = true;
    let mut run_over = |k: u32, max_len: usize| {
        let a = Alphabet::new(k).unwrap();
        for n in 0..=max_len {
            for w in a.words(n) {
                let pair = rsk(&w);
                ok &= pair.p().shape() == pair.q().shape()
                    && validate(pair.p().as_tableau(), TableauKind::Semistandard).is_ok()
                    && validate(pair.q().as_tableau(), TableauKind::Standard).is_ok()
                    && rsk_inverse(&pair, a).unwrap() == w;
                checked += 1;
            }
        }
    };
    for k in 1..=3 {
        run_over(k, 7);
    }
    run_over(2, 12);
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(10);
    line(1, ok && fast, &format!("{checked} words, {elapsed:.2?}"));
    assert!(ok);
    assert!(fast);
}

#[test]
fn criterion_02_rank_is_second_row() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut ok = true;
    for n in 1..=14 {
        for w in Alphabet::BINARY.words(n) {
            ok &= rank(&w).unwrap() == rsk(&w).shape().row(1);
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(5);
    line(
        2,
        ok && fast && checked == 32766,
        &format!("{checked} words, {elapsed:.2?}"),
    );
    assert_eq!(checked, 32766);
    assert!(ok);
    assert!(fast);
}

/// Two labelings induce the same partition iff each label determines the other.
fn same_partition<A, B>(items: impl Iterator<Item = (A, B)>) -> bool
where
    A: std::hash::Hash + Eq + Clone,
    B: std::hash::Hash + Eq + Clone,
{
    let mut forward: HashMap<A, B> = HashMap::new();
    let mut backward: HashMap<B, A> = HashMap::new();
    items.into_iter().all(|(a, b)| {
        forward.entry(a.clone()).or_insert_with(|| b.clone()) == &b && backward.entry(b).or_insert(a.clone()) == &a
    })
}

#[test]
fn criterion_03_xi_is_q_equality() {
    let mut ok = true;
    for n in 0..=12 {
        let words: Vec<Word> = Alphabet::BINARY.words(n).collect();
        // the relation as computed by the predicate, against one member per Q class
        let mut reps: BTreeMap<_, Word> = BTreeMap::new();
        for w in &words {
            let q = rsk(w).q().clone();
            let rep = reps.entry(q).or_insert_with(|| w.clone());
            ok &= xi_equivalent_binary(w, rep).unwrap();
        }
        let reps: Vec<&Word> = reps.values().collect();
        for (i, u) in reps.iter().enumerate() {
            for v in &reps[i + 1..] {
                ok &= !xi_equivalent_binary(u, v).unwrap();
            }
        }
    }
    line(
        3,
        ok,
        "binary words of length <= 12, every pair covered through class representatives",
    );
    assert!(ok);
}

#[test]
fn criterion_04_eta_is_p_equality() {
    let mut ok = true;
    for n in 0..=10 {
        let words: Vec<Word> = Alphabet::BINARY.words(n).collect();
        ok &= same_partition(
            words
                .iter()
                .map(|w| ((rank(w).unwrap(), w.content()), rsk(w).p().clone())),
        );
        let mut classes: BTreeMap<_, Vec<&Word>> = BTreeMap::new();
        for w in &words {
            classes.entry(rsk(w).p().clone()).or_default().push(w);
        }
        let classes: Vec<Vec<&Word>> = classes.into_values().collect();
        for tail_len in 0..=6 {
            for tail in Alphabet::BINARY.words(tail_len) {
                let point = |w: &Word| TruncatedPoint::new(w.clone(), tail.clone()).unwrap();
                for (ci, class) in classes.iter().enumerate() {
                    let rep = point(class[0]);
                    for w in class {
                        let x = point(w);
                        ok &= eta_equivalent_binary(&x, &rep).unwrap();
                        ok &= first_shape_disagreement(&x, &rep).unwrap().is_none();
                    }
                    for other in &classes[ci + 1..] {
                        ok &= !eta_equivalent_binary(&point(other[0]), &rep).unwrap();
                    }
                }
            }
        }
    }
    line(4, ok, "binary prefixes <= 10, tails <= 6");
    assert!(ok);
}

#[test]
fn criterion_05_classes_partition_words() {
    let mut ok = true;
    for k in 1..=3 {
        let a = Alphabet::new(k).unwrap();
        for n in 0..=6 {
            let mut by_p: BTreeMap<_, Vec<Word>> = BTreeMap::new();
            let mut by_q: BTreeMap<_, Vec<Word>> = BTreeMap::new();
            for w in a.words(n) {
                let pair = rsk(&w);
                by_p.entry(pair.p().clone()).or_default().push(w.clone());
                by_q.entry(pair.q().clone()).or_default().push(w);
            }
            let mut plactic = BTreeMap::new();
            let mut coplactic = BTreeMap::new();
            for shape in Shape::all_of_size(n) {
                for t in semistandard_tableaux(&shape, a) {
                    let class: Vec<Word> = enumerate_plactic_class(&t, a).unwrap().into_iter().collect();
                    plactic.insert(t, class);
                }
                for t in standard_tableaux(&shape) {
                    let class: Vec<Word> = enumerate_coplactic_class(&t, a).into_iter().collect();
                    if !class.is_empty() {
                        coplactic.insert(t, class);
                    }
                }
            }
            ok &= plactic == by_p && coplactic == by_q;
        }
    }
    line(5, ok, "k <= 3, n <= 6");
    assert!(ok);
}

#[test]
fn criterion_06_transition_formula() {
    let cfg = section("transition");
    let start = Instant::now();
    let report = simulate(&cfg);
    let elapsed = start.elapsed();
    let cells = stat(&report, &["cells"]).as_array().unwrap();
    let mut judged = 0;
    let mut worst: f64 = 0.0;
    for cell in cells {
        let j = cell["j"].as_u64().unwrap() as usize;
        let visits = cell["visits"].as_u64().unwrap() as usize;
        if j <= cfg.max_gap && visits >= cfg.min_visits {
            let err = (cell["up_frequency"].as_f64().unwrap() - cell["expected_up"].as_f64().unwrap()).abs();
            worst = worst.max(err);
            judged += 1;
        }
    }
    let wall = cells[0]["down"].as_u64() == Some(0) && cells[0]["up_frequency"].as_f64() == Some(1.0);
    let ok = judged == cfg.max_gap + 1 && worst <= cfg.tolerance && wall && elapsed < Duration::from_secs(30);
    line(
        6,
        ok,
        &format!("{judged} cells judged, worst |error| {worst:.4}, j=0 up-frequency exactly 1: {wall}, {elapsed:.2?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_07_thoma_frequencies() {
    let cfg = section("thoma");
    let report = simulate(&cfg);
    let rows = stat(&report, &["rows"]).as_array().unwrap();
    let devs: Vec<f64> = rows.iter().map(|r| r["mean_abs_deviation"].as_f64().unwrap()).collect();
    let depth = stat(&report, &["max_rows_seen"]).as_u64().unwrap();
    let ok = devs.iter().all(|&d| d <= cfg.tolerance) && depth <= 3 && report.failures.is_empty();
    line(7, ok, &format!("mean |λ_i/n - p_i| = {devs:.4?}, at most {depth} rows"));
    assert!(ok);
}

#[test]
fn criterion_08_totality() {
    let sep_cfg = section("separation");
    let sep = simulate(&sep_cfg);
    let censored = f64_at(&sep, &["times", "censored_fraction"]);
    let sep_ok = censored <= sep_cfg.epsilon;

    let det_cfg = section("determination");
    let det = simulate(&det_cfg);
    let fraction = f64_at(&det, &["fraction_first_half"]);
    let det_ok = fraction >= det_cfg.min_fraction && det.failures.is_empty();

    line(
        8,
        sep_ok && det_ok,
        &format!(
            "separated {:.3} of pairs by step {} (need >= {:.2}); decoder determined {fraction:.4} of positions <= n/2 at n = {} (need >= {:.2}, sound: {})",
            1.0 - censored,
            sep_cfg.horizon,
            1.0 - sep_cfg.epsilon,
            det_cfg.n,
            det_cfg.min_fraction,
            det.failures.is_empty()
        ),
    );
    assert!(sep_ok, "separation censored fraction {censored}");
    assert!(det_ok, "decoder determination {fraction}");
}

#[test]
fn criterion_09_first_row_vanishing() {
    let uni_cfg = section("vanishing_uniform");
    let drift_cfg = section("vanishing_drift");
    assert_eq!(uni_cfg.horizon, 10 * drift_cfg.horizon);
    let uni = simulate(&uni_cfg);
    let drift = simulate(&drift_cfg);
    let c_uni = f64_at(&uni, &["times", "censored_fraction"]);
    let c_drift = f64_at(&drift, &["times", "censored_fraction"]);
    let ok = uni.verdict == Verdict::Pass && drift.verdict == Verdict::Pass;
    line(
        9,
        ok,
        &format!(
            "censored {c_uni:.3} within {} (uniform), {c_drift:.3} within {} (p = (0.6, 0.4))",
            uni_cfg.horizon, drift_cfg.horizon
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_10_coupled_domination() {
    let cfg = section("domination");
    let report = simulate(&cfg);
    let violations = stat(&report, &["violations"]).as_u64().unwrap();
    let up = f64_at(&report, &["up_rate"]);
    let down = f64_at(&report, &["down_rate"]);
    let p = f64_at(&report, &["p"]);
    let ok = violations == 0 && (up - p).abs() <= cfg.tolerance && (down - p).abs() <= cfg.tolerance;
    line(
        10,
        ok,
        &format!("{violations} domination violations, z' up rate {up:.4}, down rate {down:.4}, p = {p}"),
    );
    assert!(ok);
}

#[test]
fn criterion_11_transposition_coupling() {
    let cfg = section("transposition");
    let report = simulate(&cfg);
    let censored = f64_at(&report, &["times", "censored_fraction"]);
    let broken = stat(&report, &["bookkeeping_broken_trials"]).as_u64().unwrap();
    let violations = stat(&report, &["bookkeeping_violations"]).as_u64().unwrap();
    let monotone_failures = stat(&report, &["v_monotone_failures"]).as_u64().unwrap();
    let permanence = stat(&report, &["permanence_failures"]).as_u64().unwrap();

    let orbit_cfg = section("orbit");
    let orbit = simulate(&orbit_cfg);
    let orbit_censored = f64_at(&orbit, &["times", "censored_fraction"]);

    let merge_ok = censored <= cfg.epsilon && orbit_censored <= orbit_cfg.epsilon && permanence == 0;
    let invariant_ok = violations == 0 && monotone_failures == 0;
    line(
        11,
        merge_ok && invariant_ok,
        &format!(
            "merged {:.3} within {} (transposition), {:.3} within {} (full orbit); bookkeeping violated in {broken} of {} trials ({violations} steps), v_j decreased in {monotone_failures}",
            1.0 - censored,
            cfg.horizon,
            1.0 - orbit_censored,
            orbit_cfg.horizon,
            cfg.trials
        ),
    );
    assert!(merge_ok);
    assert!(invariant_ok, "{:?}", report.failures.first());
}

#[test]
fn criterion_12_determinism() {
    let all = table();
    let det = all["determinism"].as_table().unwrap();
    let threads: Vec<usize> = det["threads"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_integer().unwrap() as usize)
        .collect();
    let cap = |key: &str| det[key].as_integer().unwrap() as usize;
    let mut ok = true;
    let mut compared = Vec::new();
    for (name, value) in &all {
        if name == "determinism" {
            continue;
        }
        let mut cfg = value.clone().try_into::<PartialConfig>().unwrap().resolve().unwrap();
        cfg.trials = cfg.trials.min(cap("max_trials"));
        cfg.steps = cfg.steps.min(cap("max_steps"));
        cfg.horizon = cfg.horizon.min(cap("max_horizon"));
        let reports: Vec<String> = threads.iter().map(|&t| run(&cfg, t).unwrap().to_json()).collect();
        ok &= reports.windows(2).all(|w| w[0] == w[1]);
        compared.push(name.as_str());
    }
    line(
        12,
        ok,
        &format!("byte-identical JSON at threads {threads:?} for {}", compared.join(", ")),
    );
    assert!(ok);
}
