use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Core(#[from] rskdyn_core::Error),
    #[error("invalid probability vector: {0}")]
    Probabilities(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parameters are outside the scope of this experiment: {0}")]
    Scope(String),
    #[error("coupling invariant broken: {0}")]
    Internal(String),
    #[error("cannot build thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("cannot parse TOML config: {0}")]
    Toml(#[from] toml::de::Error),
}

pub type Result<T> = std::result::Result<T, ExperimentError>;
