use rayon::ThreadPoolBuilder;
use serde::Serialize;

use crate::config::{ExperimentConfig, ExperimentKind};
use crate::error::Result;
use crate::experiments::{determination, domination, merge, separation, thoma, transition, vanishing};
use crate::outcome::Outcome;
use crate::report::{ExperimentReport, Verdict, SCHEMA_VERSION};

fn report<S: Serialize>(cfg: &ExperimentConfig, outcome: Outcome<S>) -> ExperimentReport {
    let mut warnings = Vec::new();
    if !cfg.probabilities().is_sorted() {
        warnings.push(format!(
            "WARNING: p = {:?} is not nonincreasing; this run lies outside the hypothesis p_1 >= ... >= p_k",
            cfg.p
        ));
    }
    ExperimentReport {
        schema_version: SCHEMA_VERSION,
        experiment: cfg.experiment.name().to_owned(),
        parameters: cfg.clone(),
        statistics: outcome.statistics_json(),
        verdict: Verdict::from_checks(outcome.exact_ok, outcome.statistical_ok),
        failures: outcome.failures,
        warnings,
        trials: outcome.trials,
    }
}

/// Runs `cfg` on a pool of `threads` workers (0 = rayon's default). Trials
/// are reduced in index order, so the report does not depend on `threads`.
pub fn run(cfg: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    let pool = ThreadPoolBuilder::new().num_threads(threads).build()?;
    let pool = &pool;
    Ok(match cfg.experiment {
        ExperimentKind::TransitionStats => report(cfg, transition::run(cfg, pool)?),
        ExperimentKind::ThomaFrequencies => report(cfg, thoma::run(cfg, pool)?),
        ExperimentKind::SeparationTime => report(cfg, separation::run(cfg, pool)?),
        ExperimentKind::Determination => report(cfg, determination::run(cfg, pool)?),
        ExperimentKind::FirstRowVanishing => report(cfg, vanishing::run(cfg, pool)?),
        ExperimentKind::CoupledWalkDomination => report(cfg, domination::run(cfg, pool)?),
        ExperimentKind::TranspositionCoupling => report(cfg, merge::run_transposition(cfg, pool)?),
        ExperimentKind::DeFinettiToEta => report(cfg, merge::run_orbit(cfg, pool)?),
    })
}
