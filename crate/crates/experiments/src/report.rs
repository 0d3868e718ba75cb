use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    /// Fail if an exact invariant broke, inconclusive if only a statistical
    /// bound missed, pass otherwise.
    pub fn from_checks(exact_ok: bool, statistical_ok: bool) -> Verdict {
        match (exact_ok, statistical_ok) {
            (false, _) => Verdict::Fail,
            (true, false) => Verdict::Inconclusive,
            (true, true) => Verdict::Pass,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 2,
            Verdict::Inconclusive => 3,
        }
    }
}

/// A per-trial breach of an exact invariant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub step: Option<usize>,
    pub message: String,
}

/// One row of the per-trial CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    /// Hitting, separation or merge step; `None` when censored or not applicable.
    pub time: Option<usize>,
    pub censored: bool,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema_version: u32,
    pub experiment: String,
    pub parameters: ExperimentConfig,
    pub statistics: serde_json::Value,
    pub verdict: Verdict,
    pub failures: Vec<TrialFailure>,
    pub warnings: Vec<String>,
    pub trials: Vec<TrialRecord>,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `trial,time,censored,values` with values joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,time,censored,values\n");
        for row in &self.trials {
            let time = row.time.map(|t| t.to_string()).unwrap_or_default();
            let values: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.trial,
                time,
                row.censored,
                values.join(";")
            ));
        }
        out
    }
}
