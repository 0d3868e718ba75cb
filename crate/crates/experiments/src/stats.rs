use serde::Serialize;

/// Distribution of a possibly censored waiting time over trials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensoredTimes {
    pub trials: usize,
    pub observed: usize,
    pub censored: usize,
    pub censored_fraction: f64,
    pub median: Option<usize>,
    pub p90: Option<usize>,
    pub p99: Option<usize>,
    pub max: Option<usize>,
    pub mean_observed: Option<f64>,
}

impl CensoredTimes {
    pub fn from_times(times: &[Option<usize>]) -> Self {
        let mut seen: Vec<usize> = times.iter().flatten().copied().collect();
        seen.sort_unstable();
        let trials = times.len();
        let censored = trials - seen.len();
        // quantiles over all trials, censored ones counting as +infinity
        let quantile = |q: f64| -> Option<usize> {
            if trials == 0 {
                return None;
            }
            let rank = ((q * trials as f64).ceil() as usize).clamp(1, trials);
            seen.get(rank - 1).copied()
        };
        Self {
            trials,
            observed: seen.len(),
            censored,
            censored_fraction: if trials == 0 {
                0.0
            } else {
                censored as f64 / trials as f64
            },
            median: quantile(0.5),
            p90: quantile(0.9),
            p99: quantile(0.99),
            max: seen.last().copied(),
            mean_observed: (!seen.is_empty()).then(|| seen.iter().sum::<usize>() as f64 / seen.len() as f64),
        }
    }
}

/// Half-width of the 3σ binomial band around `p` for `n` observations.
pub fn binomial_half_width(p: f64, n: usize) -> f64 {
    if n == 0 {
        return f64::INFINITY;
    }
    3.0 * (p * (1.0 - p) / n as f64).sqrt()
}

pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        0.0
    } else {
        xs.iter().sum::<f64>() / xs.len() as f64
    }
}

/// Sample standard deviation (zero for fewer than two values).
pub fn std_dev(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() - 1) as f64).sqrt()
}
