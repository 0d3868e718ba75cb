//! Row frequencies `λ_i(n) / n` of the youngized Bernoulli word.

use rayon::ThreadPool;
use rskdyn_core::{Retention, YoungizationState};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::Result;
use crate::outcome::{par_trials, Outcome};
use crate::report::{TrialFailure, TrialRecord};
use crate::rng::Lane;
use crate::source::BernoulliSource;
use crate::stats::{mean, std_dev};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowFrequency {
    pub row: usize,
    pub p: f64,
    pub mean: f64,
    pub std_dev: f64,
    pub mean_abs_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThomaStats {
    pub n: usize,
    pub rows: Vec<RowFrequency>,
    pub max_rows_seen: usize,
}

pub fn run(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<ThomaStats>> {
    let p = cfg.probabilities();
    let k = cfg.k as usize;
    let per_trial = par_trials(pool, cfg.trials, |t| {
        let mut source = BernoulliSource::new(&p, cfg.seed, Lane::Letters, t);
        let mut state = YoungizationState::with_retention(p.alphabet(), Retention::Window(0));
        for _ in 0..cfg.n {
            state
                .push_letter(source.next_letter())
                .expect("letters come from the alphabet");
        }
        let rows = state.row_lengths().to_vec();
        let freqs: Vec<f64> = (0..k)
            .map(|i| rows.get(i).copied().unwrap_or(0) as f64 / cfg.n.max(1) as f64)
            .collect();
        (rows.len(), freqs)
    });

    let mut failures = Vec::new();
    let mut trials = Vec::new();
    for (t, (depth, freqs)) in per_trial.iter().enumerate() {
        if *depth > k {
            failures.push(TrialFailure {
                trial: t as u64,
                step: Some(cfg.n),
                message: format!("{depth} rows with k = {k}"),
            });
        }
        trials.push(TrialRecord {
            trial: t as u64,
            time: None,
            censored: false,
            values: freqs.clone(),
        });
    }
    let rows: Vec<RowFrequency> = (0..k)
        .map(|i| {
            let xs: Vec<f64> = per_trial.iter().map(|(_, f)| f[i]).collect();
            let devs: Vec<f64> = xs.iter().map(|x| (x - p.as_slice()[i]).abs()).collect();
            RowFrequency {
                row: i + 1,
                p: p.as_slice()[i],
                mean: mean(&xs),
                std_dev: std_dev(&xs),
                mean_abs_deviation: mean(&devs),
            }
        })
        .collect();
    let statistical_ok = rows.iter().all(|r| r.mean_abs_deviation <= cfg.tolerance);
    let max_rows_seen = per_trial.iter().map(|(d, _)| *d).max().unwrap_or(0);
    Ok(Outcome {
        statistics: ThomaStats {
            n: cfg.n,
            rows,
            max_rows_seen,
        },
        exact_ok: failures.is_empty(),
        statistical_ok,
        failures,
        trials,
    })
}
