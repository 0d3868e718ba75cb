//! Empirical kernel of the gap walk `j = λ_1 - λ_2` for two letters.
//!
//! From the empty shape the walk is restarted every `segment_len` steps: the
//! gap drifts to infinity like `sqrt(n)`, so one long trajectory would visit
//! each small `j` only a handful of times. The kernel is time-homogeneous, so
//! restarts do not bias the per-`j` frequencies.

use rayon::ThreadPool;
use rskdyn_core::{Retention, YoungizationState};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{ExperimentError, Result};
use crate::outcome::{par_trials, Outcome};
use crate::report::TrialFailure;
use crate::rng::Lane;
use crate::source::BernoulliSource;
use crate::stats::binomial_half_width;

/// `Prob(j, j + 1) = (j + 2) / (2 (j + 1))` for `p = (1/2, 1/2)`.
pub fn expected_up(j: usize) -> f64 {
    (j + 2) as f64 / (2 * (j + 1)) as f64
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapCell {
    pub j: usize,
    pub visits: u64,
    pub up: u64,
    pub down: u64,
    pub up_frequency: f64,
    pub expected_up: Option<f64>,
    /// `max(3σ binomial half-width, tolerance)`.
    pub band: Option<f64>,
    pub judged: bool,
    pub within: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransitionStats {
    pub segments: usize,
    pub segment_len: usize,
    pub total_steps: u64,
    pub cells: Vec<GapCell>,
    pub down_moves_from_wall: u64,
}

/// Up/down counts indexed by `j`, for one restarted segment.
fn segment_counts(cfg: &ExperimentConfig, segment: u64, len: usize) -> Vec<(u64, u64)> {
    let p = cfg.probabilities();
    let mut source = BernoulliSource::new(&p, cfg.seed, Lane::Letters, segment);
    let mut state = YoungizationState::with_retention(p.alphabet(), Retention::Window(0));
    let mut counts: Vec<(u64, u64)> = Vec::new();
    for _ in 0..len {
        let rows = state.row_lengths();
        let j = rows.first().copied().unwrap_or(0) - rows.get(1).copied().unwrap_or(0);
        if counts.len() <= j {
            counts.resize(j + 1, (0, 0));
        }
        let row = state
            .push_letter(source.next_letter())
            .expect("letters come from the alphabet");
        if row == 1 {
            counts[j].0 += 1;
        } else {
            counts[j].1 += 1;
        }
    }
    counts
}

pub fn run(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<TransitionStats>> {
    if cfg.k != 2 {
        return Err(ExperimentError::Scope("the gap walk is defined for k = 2".into()));
    }
    let uniform = cfg.probabilities().is_uniform();
    if cfg.formula_check && !uniform {
        return Err(ExperimentError::Scope(
            "the transition formula holds for p = (1/2, 1/2) only; set formula_check = false to record the empirical kernel".into(),
        ));
    }
    let segments = cfg.steps.div_ceil(cfg.segment_len);
    let per_segment = par_trials(pool, segments, |s| {
        let start = s as usize * cfg.segment_len;
        segment_counts(cfg, s, cfg.segment_len.min(cfg.steps - start))
    });
    let mut totals: Vec<(u64, u64)> = Vec::new();
    for counts in per_segment {
        if totals.len() < counts.len() {
            totals.resize(counts.len(), (0, 0));
        }
        for (t, c) in totals.iter_mut().zip(counts) {
            t.0 += c.0;
            t.1 += c.1;
        }
    }

    let cells: Vec<GapCell> = totals
        .iter()
        .enumerate()
        .map(|(j, &(up, down))| {
            let visits = up + down;
            let up_frequency = if visits == 0 { 0.0 } else { up as f64 / visits as f64 };
            let expected = uniform.then(|| expected_up(j));
            let band = expected.map(|e| binomial_half_width(e, visits as usize).max(cfg.tolerance));
            let judged = expected.is_some() && j <= cfg.max_gap && visits as usize >= cfg.min_visits;
            let within = judged.then(|| (up_frequency - expected.unwrap()).abs() <= band.unwrap());
            GapCell {
                j,
                visits,
                up,
                down,
                up_frequency,
                expected_up: expected,
                band,
                judged,
                within,
            }
        })
        .collect();

    let down_moves_from_wall = totals.first().map_or(0, |c| c.1);
    let mut failures = Vec::new();
    if down_moves_from_wall > 0 {
        failures.push(TrialFailure {
            trial: 0,
            step: None,
            message: format!("{down_moves_from_wall} down-moves from j = 0"),
        });
    }
    let statistical_ok = uniform && cells.iter().all(|c| c.within != Some(false));
    Ok(Outcome {
        statistics: TransitionStats {
            segments,
            segment_len: cfg.segment_len,
            total_steps: cfg.steps as u64,
            cells,
            down_moves_from_wall,
        },
        exact_ok: failures.is_empty(),
        statistical_ok,
        failures,
        trials: Vec::new(),
    })
}
