//! Coupling of `m_n(ℓ)` with a walk `z'_n` that steps up with probability `p`
//! and down with probability `p`, in the balanced case `p_{ℓ-1} = p_ℓ = p`.
//!
//! `z'` steps up exactly when `m` does (the letter is `ℓ`). When the letter
//! would lower `m` (it lies in `[a_n, ℓ)`, an event of probability `r_n`), `z'`
//! steps down with conditional probability `p / r_n`, so its down-rate is
//! exactly `p`. Domination `m <= z'` holds as long as `m` stays positive; once
//! `m` hits zero the bound says nothing, so a new epoch with `z' := m` starts
//! the next time `m` is positive.

use rand::Rng;
use rayon::ThreadPool;
use rskdyn_core::{Retention, YoungizationState};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{ExperimentError, Result};
use crate::outcome::{par_trials, Outcome};
use crate::report::{TrialFailure, TrialRecord};
use crate::rng::{trial_rng, Lane};
use crate::source::BernoulliSource;

const BALANCE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct RunTrace {
    pub steps: u64,
    pub ups: u64,
    pub downs: u64,
    pub epochs: u64,
    pub checked_steps: u64,
    /// `(step, m, z')` at the first few steps where `m > z'`.
    pub violations: Vec<(usize, usize, i64)>,
    pub violation_count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominationStats {
    pub ell: u32,
    pub q: usize,
    pub p: f64,
    pub runs: usize,
    pub steps_per_run: usize,
    pub up_rate: f64,
    pub down_rate: f64,
    pub epochs: u64,
    pub checked_steps: u64,
    pub violations: u64,
}

/// One coupled run of `steps` transitions after the first `q` letters.
pub fn coupled_run(cfg: &ExperimentConfig, trial: u64) -> Result<RunTrace> {
    let probs = cfg.probabilities();
    let ell = cfg.ell;
    let p = probs.of(ell);
    let mut letters = BernoulliSource::new(&probs, cfg.seed, Lane::Letters, trial);
    let mut coins = trial_rng(cfg.seed, Lane::Coins, trial);
    let mut state = YoungizationState::with_retention(probs.alphabet(), Retention::Window(0));
    for _ in 0..cfg.q {
        state.push_letter(letters.next_letter())?;
    }
    let mut trace = RunTrace::default();
    let m = state.m_count(ell)?;
    let mut z: Option<i64> = (m > 0).then_some(m as i64);
    trace.epochs = u64::from(z.is_some());

    for n in cfg.q..cfg.q + cfg.steps {
        let a = state.greatest_below_in_first_row(ell);
        let r: f64 = (a..ell).map(|l| probs.of(l)).sum();
        if r + BALANCE_TOLERANCE < p {
            return Err(ExperimentError::Internal(format!("r_n = {r} < p = {p} at step {n}")));
        }
        let coin = coins.random_bool((p / r).min(1.0));
        let x = letters.next_letter();
        let up = x == ell;
        let down = a <= x && x < ell && coin;
        trace.steps += 1;
        trace.ups += u64::from(up);
        trace.downs += u64::from(down);
        state.push_letter(x)?;
        let m = state.m_count(ell)?;
        z = match z {
            Some(zv) => {
                let zv = zv + i64::from(up) - i64::from(down);
                trace.checked_steps += 1;
                if m as i64 > zv {
                    trace.violation_count += 1;
                    if trace.violations.len() < 10 {
                        trace.violations.push((n + 1, m, zv));
                    }
                }
                (m > 0).then_some(zv)
            }
            None if m > 0 => {
                trace.epochs += 1;
                Some(m as i64)
            }
            None => None,
        };
    }
    Ok(trace)
}

pub fn run(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<DominationStats>> {
    let probs = cfg.probabilities();
    if cfg.ell < 2 || cfg.ell > cfg.k {
        return Err(ExperimentError::Scope(format!(
            "ell = {} must lie in 2..={}",
            cfg.ell, cfg.k
        )));
    }
    let (below, at) = (probs.of(cfg.ell - 1), probs.of(cfg.ell));
    if (below - at).abs() > BALANCE_TOLERANCE {
        return Err(ExperimentError::Scope(format!(
            "the coupling needs p_(ell-1) = p_ell, got {below} and {at}"
        )));
    }
    let traces: Vec<RunTrace> = par_trials(pool, cfg.trials, |t| coupled_run(cfg, t))
        .into_iter()
        .collect::<Result<_>>()?;

    let mut failures = Vec::new();
    let mut trials = Vec::new();
    for (t, tr) in traces.iter().enumerate() {
        for &(step, m, zv) in &tr.violations {
            failures.push(TrialFailure {
                trial: t as u64,
                step: Some(step),
                message: format!("m = {m} exceeds z' = {zv}"),
            });
        }
        let steps = tr.steps.max(1) as f64;
        trials.push(TrialRecord {
            trial: t as u64,
            time: None,
            censored: false,
            values: vec![
                tr.ups as f64 / steps,
                tr.downs as f64 / steps,
                tr.violation_count as f64,
            ],
        });
    }
    let total_steps: u64 = traces.iter().map(|t| t.steps).sum();
    let denom = total_steps.max(1) as f64;
    let up_rate = traces.iter().map(|t| t.ups).sum::<u64>() as f64 / denom;
    let down_rate = traces.iter().map(|t| t.downs).sum::<u64>() as f64 / denom;
    let violations: u64 = traces.iter().map(|t| t.violation_count).sum();
    let statistical_ok = (up_rate - at).abs() <= cfg.tolerance && (down_rate - at).abs() <= cfg.tolerance;
    Ok(Outcome {
        statistics: DominationStats {
            ell: cfg.ell,
            q: cfg.q,
            p: at,
            runs: cfg.trials,
            steps_per_run: cfg.steps,
            up_rate,
            down_rate,
            epochs: traces.iter().map(|t| t.epochs).sum(),
            checked_steps: traces.iter().map(|t| t.checked_steps).sum(),
            violations,
        },
        exact_ok: violations == 0,
        statistical_ok,
        failures,
        trials,
    })
}
