//! First return of the first-row counter `m_n(ℓ)` to zero.

use rayon::ThreadPool;
use rskdyn_core::{Alphabet, Letter, Result as CoreResult, Retention, YoungizationState};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{ExperimentError, Result};
use crate::outcome::{par_trials, Outcome};
use crate::report::TrialRecord;
use crate::rng::Lane;
use crate::source::BernoulliSource;
use crate::stats::CensoredTimes;

/// Least `N` with `q <= N <= horizon` and `m_N(ℓ) = 0`, reading `letters` as
/// `x_1, x_2, ...`; `None` if the counter stays positive through the horizon.
pub fn first_vanishing_time(
    letters: impl IntoIterator<Item = Letter>,
    alphabet: Alphabet,
    ell: Letter,
    q: usize,
    horizon: usize,
) -> CoreResult<Option<usize>> {
    let mut state = YoungizationState::with_retention(alphabet, Retention::Window(0));
    if state.m_count(ell)? == 0 && q == 0 {
        return Ok(Some(0));
    }
    for (i, letter) in letters.into_iter().take(horizon).enumerate() {
        state.push_letter(letter)?;
        let n = i + 1;
        if n >= q && state.m_count(ell)? == 0 {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VanishingStats {
    pub ell: Letter,
    pub q: usize,
    pub horizon: usize,
    /// `p_{ℓ-1} > p_ℓ`: the counter drifts back towards zero.
    pub drift_down: bool,
    pub times: CensoredTimes,
}

pub fn run(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<VanishingStats>> {
    let p = cfg.probabilities();
    let alphabet = p.alphabet();
    if cfg.ell < 2 || cfg.ell > cfg.k {
        return Err(ExperimentError::Scope(format!(
            "ell = {} must lie in 2..={}",
            cfg.ell, cfg.k
        )));
    }
    let times = par_trials(pool, cfg.trials, |t| {
        let source = BernoulliSource::new(&p, cfg.seed, Lane::Letters, t);
        first_vanishing_time(source, alphabet, cfg.ell, cfg.q, cfg.horizon).expect("ell and letters were checked")
    });
    let stats = CensoredTimes::from_times(&times);
    let trials = times
        .iter()
        .enumerate()
        .map(|(t, &time)| TrialRecord {
            trial: t as u64,
            time,
            censored: time.is_none(),
            values: Vec::new(),
        })
        .collect();
    let statistical_ok = stats.censored_fraction <= cfg.epsilon;
    Ok(Outcome {
        statistics: VanishingStats {
            ell: cfg.ell,
            q: cfg.q,
            horizon: cfg.horizon,
            drift_down: p.of(cfg.ell - 1) > p.of(cfg.ell),
            times: stats,
        },
        exact_ok: true,
        statistical_ok,
        failures: Vec::new(),
        trials,
    })
}
