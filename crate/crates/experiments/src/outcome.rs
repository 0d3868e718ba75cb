use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;

use crate::report::{TrialFailure, TrialRecord};

/// What an experiment hands back to the runner before it becomes a report.
#[derive(Debug, Clone)]
pub struct Outcome<S> {
    pub statistics: S,
    pub exact_ok: bool,
    pub statistical_ok: bool,
    pub failures: Vec<TrialFailure>,
    pub trials: Vec<TrialRecord>,
}

impl<S: Serialize> Outcome<S> {
    pub fn statistics_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.statistics).expect("statistics serialize")
    }
}

/// Runs `count` independent trials on `pool`; results come back in trial order.
pub fn par_trials<T, F>(pool: &ThreadPool, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync,
{
    pool.install(|| (0..count as u64).into_par_iter().map(&f).collect())
}
