//! Merging of `P_N(x)` and `P_N(y)` when `y` permutes the first `n` letters
//! of `x` and both share the tail.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::ThreadPool;
use rskdyn_core::{Alphabet, Letter, Retention, YoungizationState};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{ExperimentError, Result};
use crate::outcome::{par_trials, Outcome};
use crate::report::{TrialFailure, TrialRecord};
use crate::rng::{trial_rng, Lane};
use crate::source::BernoulliSource;
use crate::stats::CensoredTimes;

/// Merge time of one coupled pair plus the post-merge check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeTrace {
    /// Least `N >= n` with `P_N(x) = P_N(y)`, if `N <= horizon`.
    pub merge: Option<usize>,
    /// Whether `P` stayed equal for `window` steps after the merge.
    pub permanent: bool,
}

struct MergeTracker {
    n: usize,
    horizon: usize,
    window: usize,
    trace: MergeTrace,
}

impl MergeTracker {
    fn new(n: usize, horizon: usize, window: usize) -> Self {
        let merge = (n == 0).then_some(0);
        Self {
            n,
            horizon,
            window,
            trace: MergeTrace { merge, permanent: true },
        }
    }

    /// Whether step `j` should still be taken.
    fn wants(&self, j: usize) -> bool {
        match self.trace.merge {
            Some(m) => j <= m + self.window,
            None => j <= self.horizon,
        }
    }

    fn record(&mut self, j: usize, same: bool) {
        match self.trace.merge {
            None if j >= self.n && same => self.trace.merge = Some(j),
            Some(_) if !same => self.trace.permanent = false,
            _ => {}
        }
    }
}

fn check_letters(letters: &[Letter], alphabet: Alphabet) -> Result<()> {
    for &l in letters {
        alphabet.check(l)?;
    }
    Ok(())
}

/// Merge time of `x = x_prefix ++ tail` and `y = y_prefix ++ tail`, where the
/// prefixes have equal content (`x ~ y` in the de Finetti sense).
pub fn orbit_merge(
    x_prefix: &[Letter],
    y_prefix: &[Letter],
    tail: impl IntoIterator<Item = Letter>,
    alphabet: Alphabet,
    horizon: usize,
    window: usize,
) -> Result<MergeTrace> {
    check_letters(x_prefix, alphabet)?;
    check_letters(y_prefix, alphabet)?;
    let (mut a, mut b) = (x_prefix.to_vec(), y_prefix.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(ExperimentError::Scope("prefixes have different content".into()));
    }
    let n = x_prefix.len();
    let mut sx = YoungizationState::with_retention(alphabet, Retention::Window(0));
    let mut sy = YoungizationState::with_retention(alphabet, Retention::Window(0));
    let mut tracker = MergeTracker::new(n, horizon, window);
    let mut tail = tail.into_iter();
    let mut j = 1;
    while tracker.wants(j) {
        let (lx, ly) = if j <= n {
            (x_prefix[j - 1], y_prefix[j - 1])
        } else {
            match tail.next() {
                Some(l) => (l, l),
                None => break,
            }
        };
        sx.push_letter(lx)?;
        sy.push_letter(ly)?;
        tracker.record(j, sx.same_p(&sy));
        j += 1;
    }
    Ok(tracker.trace)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowUpdate {
    /// The rows still differ by the one letter `v_{j+1}`.
    Keep(Letter),
    Merge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranspositionTrace {
    /// Transposed positions are `i` and `i + 1`.
    pub i: usize,
    pub u: Letter,
    pub v: Letter,
    /// Least `j >= i + 1` with equal first rows.
    pub first_row_merge: Option<usize>,
    pub merge: MergeTrace,
    /// Successive values of `v_j` while the first rows differ.
    pub v_values: Vec<Letter>,
    pub v_monotone: bool,
    /// `(step, message)` where the bookkeeping relation or its predicted update failed.
    pub bookkeeping_violations: Vec<(usize, String)>,
    /// Step at which the first rows stopped differing by a single letter;
    /// the prediction is not continued past it.
    pub bookkeeping_broken_at: Option<usize>,
}

/// `R(x) - R(y)` as a letter: `Some(Merge)` if equal, `Some(Keep(d))` if
/// `R(x) = R(y) ∪ {d}`, `None` otherwise.
fn observe(sx: &YoungizationState, sy: &YoungizationState) -> Option<RowUpdate> {
    let mut extra = None;
    for (l, (&a, &b)) in sx.first_row().iter().zip(&sy.first_row()).enumerate() {
        match a as i64 - b as i64 {
            0 => {}
            1 if extra.is_none() => extra = Some(l as Letter + 1),
            _ => return None,
        }
    }
    Some(extra.map_or(RowUpdate::Merge, RowUpdate::Keep))
}

/// Update of the bookkeeping when `c` is inserted into a state whose first
/// row is `R(x)` and whose extra letter is `v`: unchanged unless
/// `u_j <= c < v_j`, then `min B_j`, or a merge when `B_j` is empty.
/// `None` when `A_j` is empty, which the relation rules out.
pub fn predicted_update(first_row: &[usize], v: Letter, c: Letter) -> Option<RowUpdate> {
    let u = (1..v).rev().find(|&d| first_row[d as usize - 1] > 0)?;
    let min_b = (v..=first_row.len() as Letter).find(|&d| first_row[d as usize - 1] > usize::from(d == v));
    Some(if c < u || c >= v {
        RowUpdate::Keep(v)
    } else if let Some(b) = min_b {
        RowUpdate::Keep(b)
    } else {
        RowUpdate::Merge
    })
}

/// Couples `x = prefix ++ tail` with the word that swaps positions `i` and
/// `i + 1` (1-based) and tracks the first-row bookkeeping
/// `R(x) = R(y) ∪ {v_j}` for the member with `x_i < x_{i+1}`.
pub fn transposition_merge(
    prefix: &[Letter],
    i: usize,
    tail: impl IntoIterator<Item = Letter>,
    alphabet: Alphabet,
    horizon: usize,
    window: usize,
) -> Result<TranspositionTrace> {
    let n = prefix.len();
    if i == 0 || i >= n {
        return Err(ExperimentError::Scope(format!(
            "position {i} has no right neighbour in a prefix of length {n}"
        )));
    }
    check_letters(prefix, alphabet)?;
    if prefix[i - 1] == prefix[i] {
        return Err(ExperimentError::Scope(format!(
            "x_{i} = x_{} so the transposition acts trivially",
            i + 1
        )));
    }
    let mut swapped = prefix.to_vec();
    swapped.swap(i - 1, i);
    let (x, y) = if prefix[i - 1] < prefix[i] {
        (prefix.to_vec(), swapped)
    } else {
        (swapped, prefix.to_vec())
    };
    let (u, v) = (x[i - 1], x[i]);

    let mut trace = TranspositionTrace {
        i,
        u,
        v,
        first_row_merge: None,
        merge: MergeTrace {
            merge: None,
            permanent: true,
        },
        v_values: Vec::new(),
        v_monotone: true,
        bookkeeping_violations: Vec::new(),
        bookkeeping_broken_at: None,
    };
    let mut sx = YoungizationState::with_retention(alphabet, Retention::Window(0));
    let mut sy = YoungizationState::with_retention(alphabet, Retention::Window(0));
    let mut tracker = MergeTracker::new(n, horizon, window);
    let mut tail = tail.into_iter();
    // v_j while the first rows differ
    let mut current: Option<Letter> = None;
    let mut tracking = true;
    let mut j = 1;
    while tracker.wants(j) {
        let (lx, ly) = if j <= n {
            (x[j - 1], y[j - 1])
        } else {
            match tail.next() {
                Some(l) => (l, l),
                None => break,
            }
        };
        let predicted = current
            .filter(|_| tracking)
            .map(|v| predicted_update(&sx.first_row(), v, lx));
        sx.push_letter(lx)?;
        sy.push_letter(ly)?;
        tracker.record(j, sx.same_p(&sy));

        if j > i && trace.first_row_merge.is_none() {
            let observed = observe(&sx, &sy);
            if observed == Some(RowUpdate::Merge) {
                trace.first_row_merge = Some(j);
            }
            if tracking {
                match observed {
                    None => {
                        trace
                            .bookkeeping_violations
                            .push((j, "first rows differ by more than one letter".into()));
                        trace.bookkeeping_broken_at = Some(j);
                        tracking = false;
                        current = None;
                    }
                    Some(observed) => {
                        if j == i + 1 {
                            if observed != RowUpdate::Keep(v) && observed != RowUpdate::Merge {
                                trace
                                    .bookkeeping_violations
                                    .push((j, format!("expected extra letter v = {v}, got {observed:?}")));
                            }
                        } else {
                            match predicted.flatten() {
                                None => trace.bookkeeping_violations.push((j, "A_j is empty".into())),
                                Some(p) if p != observed => trace
                                    .bookkeeping_violations
                                    .push((j, format!("predicted {p:?}, observed {observed:?}"))),
                                Some(_) => {}
                            }
                        }
                        if let RowUpdate::Keep(d) = observed {
                            if let Some(prev) = current {
                                trace.v_monotone &= d >= prev;
                            }
                            if current != Some(d) {
                                trace.v_values.push(d);
                            }
                            current = Some(d);
                        }
                    }
                }
            }
        }
        j += 1;
    }
    trace.merge = tracker.trace;
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MergeStats {
    pub n: usize,
    pub horizon: usize,
    pub window: usize,
    pub times: CensoredTimes,
    pub permanence_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TranspositionStats {
    #[serde(flatten)]
    pub merge: MergeStats,
    pub first_row_times: CensoredTimes,
    pub bookkeeping_violations: usize,
    /// Trials whose first rows stopped differing by a single letter.
    pub bookkeeping_broken_trials: usize,
    pub v_monotone_failures: usize,
    /// Prefixes redrawn because all their letters were equal.
    pub redrawn_prefixes: u64,
}

fn merge_records(traces: &[&MergeTrace]) -> Vec<TrialRecord> {
    traces
        .iter()
        .enumerate()
        .map(|(t, tr)| TrialRecord {
            trial: t as u64,
            time: tr.merge,
            censored: tr.merge.is_none(),
            values: Vec::new(),
        })
        .collect()
}

fn merge_stats(cfg: &ExperimentConfig, traces: &[&MergeTrace]) -> MergeStats {
    let times: Vec<Option<usize>> = traces.iter().map(|t| t.merge).collect();
    MergeStats {
        n: cfg.n,
        horizon: cfg.horizon,
        window: cfg.window,
        times: CensoredTimes::from_times(&times),
        permanence_failures: traces.iter().filter(|t| !t.permanent).count(),
    }
}

fn permanence_failures(traces: &[&MergeTrace]) -> Vec<TrialFailure> {
    traces
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.permanent)
        .map(|(i, t)| TrialFailure {
            trial: i as u64,
            step: t.merge,
            message: "P tableaux split again after merging".into(),
        })
        .collect()
}

pub fn run_transposition(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<TranspositionStats>> {
    let p = cfg.probabilities();
    let alphabet = p.alphabet();
    if cfg.n < 2 || cfg.k < 2 {
        return Err(ExperimentError::Scope("a transposition needs n >= 2 and k >= 2".into()));
    }
    let results = par_trials(pool, cfg.trials, |t| -> Result<(TranspositionTrace, u64)> {
        let mut source = BernoulliSource::new(&p, cfg.seed, Lane::Letters, t);
        let mut choices = trial_rng(cfg.seed, Lane::Choices, t);
        let mut redrawn = 0;
        loop {
            let prefix: Vec<Letter> = (0..cfg.n).map(|_| source.next_letter()).collect();
            let admissible: Vec<usize> = (1..cfg.n).filter(|&i| prefix[i - 1] != prefix[i]).collect();
            if admissible.is_empty() {
                redrawn += 1;
                continue;
            }
            let i = admissible[choices.random_range(0..admissible.len())];
            let trace = transposition_merge(&prefix, i, &mut source, alphabet, cfg.horizon, cfg.window)?;
            return Ok((trace, redrawn));
        }
    });
    let results: Vec<(TranspositionTrace, u64)> = results.into_iter().collect::<Result<_>>()?;
    let merges: Vec<&MergeTrace> = results.iter().map(|(t, _)| &t.merge).collect();

    let mut failures = permanence_failures(&merges);
    for (t, (tr, _)) in results.iter().enumerate() {
        for (step, message) in &tr.bookkeeping_violations {
            failures.push(TrialFailure {
                trial: t as u64,
                step: Some(*step),
                message: message.clone(),
            });
        }
        if !tr.v_monotone {
            failures.push(TrialFailure {
                trial: t as u64,
                step: None,
                message: format!("v_j decreased: {:?}", tr.v_values),
            });
        }
    }
    failures.sort_by_key(|f| (f.trial, f.step));
    let mut trials = merge_records(&merges);
    for (rec, (tr, _)) in trials.iter_mut().zip(&results) {
        rec.values = vec![tr.i as f64, tr.first_row_merge.map_or(f64::NAN, |j| j as f64)];
    }
    let first_row: Vec<Option<usize>> = results.iter().map(|(t, _)| t.first_row_merge).collect();
    let merge = merge_stats(cfg, &merges);
    let statistical_ok = merge.times.censored_fraction <= cfg.epsilon;
    let stats = TranspositionStats {
        first_row_times: CensoredTimes::from_times(&first_row),
        bookkeeping_violations: results.iter().map(|(t, _)| t.bookkeeping_violations.len()).sum(),
        bookkeeping_broken_trials: results
            .iter()
            .filter(|(t, _)| t.bookkeeping_broken_at.is_some())
            .count(),
        v_monotone_failures: results.iter().filter(|(t, _)| !t.v_monotone).count(),
        redrawn_prefixes: results.iter().map(|(_, r)| r).sum(),
        merge,
    };
    Ok(Outcome {
        statistics: stats,
        exact_ok: failures.is_empty(),
        statistical_ok,
        failures,
        trials,
    })
}

pub fn run_orbit(cfg: &ExperimentConfig, pool: &ThreadPool) -> Result<Outcome<MergeStats>> {
    let p = cfg.probabilities();
    let alphabet = p.alphabet();
    let traces = par_trials(pool, cfg.trials, |t| {
        let mut source = BernoulliSource::new(&p, cfg.seed, Lane::Letters, t);
        let mut choices = trial_rng(cfg.seed, Lane::Choices, t);
        let x: Vec<Letter> = (0..cfg.n).map(|_| source.next_letter()).collect();
        let mut y = x.clone();
        y.shuffle(&mut choices);
        orbit_merge(&x, &y, &mut source, alphabet, cfg.horizon, cfg.window)
    });
    let traces: Vec<MergeTrace> = traces.into_iter().collect::<Result<_>>()?;
    let refs: Vec<&MergeTrace> = traces.iter().collect();
    let failures = permanence_failures(&refs);
    let stats = merge_stats(cfg, &refs);
    let statistical_ok = stats.times.censored_fraction <= cfg.epsilon;
    Ok(Outcome {
        statistics: stats,
        exact_ok: failures.is_empty(),
        statistical_ok,
        failures,
        trials: merge_records(&refs),
    })
}
