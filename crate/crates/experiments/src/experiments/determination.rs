//! How much of a word its recording tableau pins down.

use rayon::ThreadPool;
use rskdyn_core::{decode, YoungizationState, DEFAULT_CANDIDATE_CAP};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{ExperimentError, Result};
use crate::outcome::{par_trials, Outcome};
use crate::report::{TrialFailure, TrialRecord};
use crate::rng::Lane;
use crate::source::BernoulliSource;
use crate::stats::mean;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeterminationStats {
    pub n: usize,
    /// Determined positions `<= n/2` over all trials, divided by their number.
    pub fraction_first_half: f64,
    pub fraction_all: f64,
    pub mean_candidates: f64,
    pub max_candidates: usize,
    pub min_fraction: f64,
}

struct TrialResult {
    half: usize,
    all: usize,
    candidates: usize,
    unsound: Option<usize>,
}

pub fn run(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<DeterminationStats>> {
    let p = cfg.probabilities();
    let alphabet = p.alphabet();
    let half = cfg.n / 2;
    let per_trial = par_trials(pool, cfg.trials, |t| -> Result<TrialResult> {
        let source = BernoulliSource::new(&p, cfg.seed, Lane::Letters, t);
        let x: Vec<u32> = source.take(cfg.n).collect();
        let mut state = YoungizationState::new(alphabet);
        for &l in &x {
            state.push_letter(l)?;
        }
        let decoded = decode(&state.q_tableau()?, alphabet, DEFAULT_CANDIDATE_CAP)?;
        let unsound = decoded
            .determined
            .iter()
            .zip(&x)
            .position(|(d, &l)| d.is_some_and(|d| d != l));
        Ok(TrialResult {
            half: decoded.determined_count(half),
            all: decoded.determined_count(cfg.n),
            candidates: decoded.candidates,
            unsound: unsound.map(|i| i + 1),
        })
    });
    let per_trial: Vec<TrialResult> = per_trial.into_iter().collect::<Result<_>>()?;
    if per_trial.is_empty() {
        return Err(ExperimentError::Config("at least one trial is required".into()));
    }

    let mut failures = Vec::new();
    let mut trials = Vec::new();
    for (t, r) in per_trial.iter().enumerate() {
        if let Some(pos) = r.unsound {
            failures.push(TrialFailure {
                trial: t as u64,
                step: Some(pos),
                message: "decoded letter differs from the word".into(),
            });
        }
        let frac = |c: usize, d: usize| if d == 0 { 1.0 } else { c as f64 / d as f64 };
        trials.push(TrialRecord {
            trial: t as u64,
            time: None,
            censored: false,
            values: vec![frac(r.half, half), frac(r.all, cfg.n), r.candidates as f64],
        });
    }
    let total_half: usize = per_trial.iter().map(|r| r.half).sum();
    let total_all: usize = per_trial.iter().map(|r| r.all).sum();
    let count = per_trial.len();
    let fraction_first_half = if half == 0 {
        1.0
    } else {
        total_half as f64 / (half * count) as f64
    };
    let fraction_all = if cfg.n == 0 {
        1.0
    } else {
        total_all as f64 / (cfg.n * count) as f64
    };
    let candidates: Vec<f64> = per_trial.iter().map(|r| r.candidates as f64).collect();
    Ok(Outcome {
        statistics: DeterminationStats {
            n: cfg.n,
            fraction_first_half,
            fraction_all,
            mean_candidates: mean(&candidates),
            max_candidates: per_trial.iter().map(|r| r.candidates).max().unwrap_or(0),
            min_fraction: cfg.min_fraction,
        },
        exact_ok: failures.is_empty(),
        statistical_ok: fraction_first_half >= cfg.min_fraction,
        failures,
        trials,
    })
}
