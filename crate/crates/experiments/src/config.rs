//! Experiment parameters.
//!
//! A [`PartialConfig`] can come from TOML or from command-line flags; layers
//! are merged (later layers win) and then resolved into a complete
//! [`ExperimentConfig`]. There are no wall-clock defaults: a seed must be
//! given explicitly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ExperimentError, Result};
use crate::source::Probabilities;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    TransitionStats,
    ThomaFrequencies,
    SeparationTime,
    Determination,
    FirstRowVanishing,
    CoupledWalkDomination,
    TranspositionCoupling,
    DeFinettiToEta,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 8] = [
        ExperimentKind::TransitionStats,
        ExperimentKind::ThomaFrequencies,
        ExperimentKind::SeparationTime,
        ExperimentKind::Determination,
        ExperimentKind::FirstRowVanishing,
        ExperimentKind::CoupledWalkDomination,
        ExperimentKind::TranspositionCoupling,
        ExperimentKind::DeFinettiToEta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::TransitionStats => "transition_stats",
            ExperimentKind::ThomaFrequencies => "thoma_frequencies",
            ExperimentKind::SeparationTime => "separation_time",
            ExperimentKind::Determination => "determination",
            ExperimentKind::FirstRowVanishing => "first_row_vanishing",
            ExperimentKind::CoupledWalkDomination => "coupled_walk_domination",
            ExperimentKind::TranspositionCoupling => "transposition_coupling",
            ExperimentKind::DeFinettiToEta => "de_finetti_to_eta",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.replace('-', "_");
        ExperimentKind::ALL
            .into_iter()
            .find(|k| k.name() == normalized)
            .ok_or_else(|| ExperimentError::Config(format!("unknown experiment {s:?}")))
    }
}

/// Every key optional; used for TOML files and flag overlays.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialConfig {
    pub experiment: Option<ExperimentKind>,
    pub k: Option<u32>,
    pub p: Option<Vec<f64>>,
    pub n: Option<usize>,
    pub trials: Option<usize>,
    pub horizon: Option<usize>,
    pub steps: Option<usize>,
    pub seed: Option<u64>,
    pub epsilon: Option<f64>,
    pub tolerance: Option<f64>,
    pub ell: Option<u32>,
    pub q: Option<usize>,
    pub segment_len: Option<usize>,
    pub min_visits: Option<usize>,
    pub max_gap: Option<usize>,
    pub min_fraction: Option<f64>,
    pub window: Option<usize>,
    pub allow_unsorted: Option<bool>,
    pub formula_check: Option<bool>,
}

impl PartialConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    /// Overlays `top` on `self`: keys set in `top` win.
    pub fn merge(self, top: PartialConfig) -> PartialConfig {
        macro_rules! pick {
            ($($field:ident),*) => {
                PartialConfig { $($field: top.$field.or(self.$field)),* }
            };
        }
        pick!(
            experiment,
            k,
            p,
            n,
            trials,
            horizon,
            steps,
            seed,
            epsilon,
            tolerance,
            ell,
            q,
            segment_len,
            min_visits,
            max_gap,
            min_fraction,
            window,
            allow_unsorted,
            formula_check
        )
    }

    pub fn resolve(self) -> Result<ExperimentConfig> {
        let experiment = self
            .experiment
            .ok_or_else(|| ExperimentError::Config("no experiment selected".into()))?;
        let seed = self
            .seed
            .ok_or_else(|| ExperimentError::Config("an explicit seed is required".into()))?;
        let p = match (self.p, self.k) {
            (Some(p), Some(k)) if p.len() != k as usize => {
                return Err(ExperimentError::Config(format!(
                    "k = {k} but p has {} entries",
                    p.len()
                )));
            }
            (Some(p), _) => p,
            (None, Some(k)) if k > 0 => vec![1.0 / k as f64; k as usize],
            (None, _) => return Err(ExperimentError::Config("either k or p must be given".into())),
        };
        let allow_unsorted = self.allow_unsorted.unwrap_or(false);
        Probabilities::new(p.clone(), allow_unsorted)?;
        let config = ExperimentConfig {
            experiment,
            k: p.len() as u32,
            p,
            n: self.n.unwrap_or(100),
            trials: self.trials.unwrap_or(1000),
            horizon: self.horizon.unwrap_or(10_000),
            steps: self.steps.unwrap_or(10_000),
            seed,
            epsilon: self.epsilon.unwrap_or(0.01),
            tolerance: self.tolerance.unwrap_or(0.01),
            ell: self.ell.unwrap_or(2),
            q: self.q.unwrap_or(1),
            segment_len: self.segment_len.unwrap_or(64),
            min_visits: self.min_visits.unwrap_or(100),
            max_gap: self.max_gap.unwrap_or(10),
            min_fraction: self.min_fraction.unwrap_or(0.99),
            window: self.window.unwrap_or(100),
            allow_unsorted,
            formula_check: self.formula_check.unwrap_or(true),
        };
        config.check()?;
        Ok(config)
    }
}

/// Fully resolved parameters. Together with the crate version this
/// determines a report completely.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub k: u32,
    pub p: Vec<f64>,
    /// Word length, prefix length or observation length, per experiment.
    pub n: usize,
    pub trials: usize,
    /// Censoring step for hitting, separation and merge times.
    pub horizon: usize,
    /// Steps per run for the transition and coupling experiments.
    pub steps: usize,
    pub seed: u64,
    /// Largest acceptable censored fraction.
    pub epsilon: f64,
    /// Frequency tolerance (floor of the binomial band for transitions).
    pub tolerance: f64,
    pub ell: u32,
    pub q: usize,
    /// Restart length of the shape walk in `transition_stats`.
    pub segment_len: usize,
    /// Cells with fewer visits are reported but not judged.
    pub min_visits: usize,
    /// Largest gap `j` judged in `transition_stats`.
    pub max_gap: usize,
    pub min_fraction: f64,
    /// Steps after a merge over which permanence is checked.
    pub window: usize,
    pub allow_unsorted: bool,
    pub formula_check: bool,
}

impl ExperimentConfig {
    pub fn probabilities(&self) -> Probabilities {
        Probabilities::new(self.p.clone(), self.allow_unsorted).expect("validated at resolve time")
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(ExperimentError::Config(msg));
        if !(0.0..=1.0).contains(&self.epsilon) {
            return bad(format!("epsilon {} is not a fraction", self.epsilon));
        }
        if !(0.0..=1.0).contains(&self.min_fraction) {
            return bad(format!("min_fraction {} is not a fraction", self.min_fraction));
        }
        if self.horizon == 0 {
            return bad("horizon must be at least 1".into());
        }
        if self.segment_len == 0 {
            return bad("segment_len must be at least 1".into());
        }
        Ok(())
    }
}
