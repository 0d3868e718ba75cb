//! First step at which the recording tableaux of two independent words differ.

use rayon::ThreadPool;
use rskdyn_core::{Alphabet, Letter, Result as CoreResult, Retention, YoungizationState};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::Result;
use crate::outcome::{par_trials, Outcome};
use crate::report::TrialRecord;
use crate::rng::Lane;
use crate::source::BernoulliSource;
use crate::stats::CensoredTimes;

/// Least `n <= horizon` with `Q_n(x) != Q_n(y)`, or `None` if the recording
/// tableaux agree through the horizon. Since `Q` is prefix-stable this is the
/// first step at which the two shape paths grow different rows.
pub fn separation_step(
    x: impl IntoIterator<Item = Letter>,
    y: impl IntoIterator<Item = Letter>,
    alphabet: Alphabet,
    horizon: usize,
) -> CoreResult<Option<usize>> {
    let mut sx = YoungizationState::with_retention(alphabet, Retention::Window(0));
    let mut sy = YoungizationState::with_retention(alphabet, Retention::Window(0));
    for (n, (a, b)) in x.into_iter().zip(y).take(horizon).enumerate() {
        if sx.push_letter(a)? != sy.push_letter(b)? {
            return Ok(Some(n + 1));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparationStats {
    pub horizon: usize,
    pub times: CensoredTimes,
    /// Pairs whose words coincided through the horizon; these are never separated.
    pub identical_pairs: usize,
}

pub fn run(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<SeparationStats>> {
    let p = cfg.probabilities();
    let alphabet = p.alphabet();
    let per_trial = par_trials(pool, cfg.trials, |t| {
        let x = BernoulliSource::new(&p, cfg.seed, Lane::Letters, t);
        let y = BernoulliSource::new(&p, cfg.seed, Lane::LettersAlt, t);
        let mut identical = true;
        let paired = x.zip(y).inspect(|(a, b)| identical &= a == b);
        let (xs, ys): (Vec<Letter>, Vec<Letter>) = paired.take(cfg.horizon).unzip();
        let time = separation_step(xs, ys, alphabet, cfg.horizon).expect("letters come from the alphabet");
        (time, identical)
    });
    let times: Vec<Option<usize>> = per_trial.iter().map(|(t, _)| *t).collect();
    let identical_pairs = per_trial.iter().filter(|(_, same)| *same).count();
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
        statistics: SeparationStats {
            horizon: cfg.horizon,
            times: stats,
            identical_pairs,
        },
        exact_ok: true,
        statistical_ok,
        failures: Vec::new(),
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_words_never_separate() {
        let w = [1, 2, 2, 1, 3, 1];
        assert_eq!(separation_step(w, w, Alphabet::new(3).unwrap(), 100).unwrap(), None);
    }

    #[test]
    fn first_differing_growth() {
        let a = Alphabet::BINARY;
        // "21" grows rows 1,2; "12" grows rows 1,1
        assert_eq!(separation_step([2, 1], [1, 2], a, 10).unwrap(), Some(2));
        // "121" bumps its 2 at step 3, "111" never leaves the first row
        assert_eq!(separation_step([1, 2, 1], [1, 1, 1], a, 10).unwrap(), Some(3));
        assert_eq!(separation_step([1, 2, 1], [1, 1, 1], a, 2).unwrap(), None);
    }
}
