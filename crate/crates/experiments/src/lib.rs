//! Seeded Monte-Carlo experiments on the youngized Bernoulli word.
//!
//! Every trial draws from its own counter-derived random stream, trials run
//! on a rayon pool and are reduced in index order, so a report depends only
//! on its [`ExperimentConfig`].

pub mod config;
pub mod error;
pub mod experiments;
pub mod outcome;
pub mod report;
pub mod rng;
pub mod runner;
pub mod source;
pub mod stats;

pub use config::{ExperimentConfig, ExperimentKind, PartialConfig};
pub use error::{ExperimentError, Result};
pub use report::{ExperimentReport, TrialFailure, TrialRecord, Verdict, SCHEMA_VERSION};
pub use runner::run;
pub use source::{BernoulliSource, Probabilities};
