use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rskdyn_core::{Alphabet, Letter};
use serde::Serialize;

use crate::error::{ExperimentError, Result};
use crate::rng::{trial_rng, Lane};

const SUM_TOLERANCE: f64 = 1e-12;

/// `p = (p_1, ..., p_k)`, strictly positive, summing to 1, and
/// nonincreasing unless explicitly allowed otherwise.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Probabilities {
    p: Vec<f64>,
    sorted: bool,
}

impl Probabilities {
    pub fn new(p: Vec<f64>, allow_unsorted: bool) -> Result<Self> {
        if p.is_empty() {
            return Err(ExperimentError::Probabilities("empty vector".into()));
        }
        if let Some(bad) = p.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
            return Err(ExperimentError::Probabilities(format!(
                "entry {bad} is not strictly positive"
            )));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(ExperimentError::Probabilities(format!("entries sum to {sum}, not 1")));
        }
        let sorted = p.windows(2).all(|w| w[0] >= w[1]);
        if !sorted && !allow_unsorted {
            return Err(ExperimentError::Probabilities(
                "entries must be nonincreasing (pass allow_unsorted for exploratory runs)".into(),
            ));
        }
        Ok(Self { p, sorted })
    }

    pub fn uniform(k: u32) -> Self {
        Self {
            p: vec![1.0 / k as f64; k as usize],
            sorted: true,
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.p
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.p.len() as u32).expect("nonempty")
    }

    pub fn is_sorted(&self) -> bool {
        self.sorted
    }

    /// `p_letter`.
    pub fn of(&self, letter: Letter) -> f64 {
        self.p[letter as usize - 1]
    }

    pub fn is_uniform(&self) -> bool {
        let first = self.p[0];
        self.p.iter().all(|&x| (x - first).abs() <= SUM_TOLERANCE)
    }
}

/// An i.i.d. letter stream with law `p`, reproducible from `(seed, lane, trial)`.
#[derive(Debug, Clone)]
pub struct BernoulliSource {
    dist: WeightedIndex<f64>,
    rng: ChaCha8Rng,
    counter: u64,
}

impl BernoulliSource {
    pub fn new(p: &Probabilities, seed: u64, lane: Lane, trial: u64) -> Self {
        Self {
            dist: WeightedIndex::new(p.as_slice()).expect("validated probabilities"),
            rng: trial_rng(seed, lane, trial),
            counter: 0,
        }
    }

    pub fn next_letter(&mut self) -> Letter {
        self.counter += 1;
        self.dist.sample(&mut self.rng) as Letter + 1
    }

    /// Letters drawn so far.
    pub fn drawn(&self) -> u64 {
        self.counter
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.random_bool(p.clamp(0.0, 1.0))
    }
}

impl Iterator for BernoulliSource {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        Some(self.next_letter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Probabilities::new(vec![0.5, 0.3, 0.2], false).is_ok());
        assert!(Probabilities::new(vec![0.3, 0.7], false).is_err());
        let p = Probabilities::new(vec![0.3, 0.7], true).unwrap();
        assert!(!p.is_sorted());
        assert!(Probabilities::new(vec![1.0, 0.0], false).is_err());
        assert!(Probabilities::new(vec![0.5, 0.4], false).is_err());
        assert!(Probabilities::new(vec![], false).is_err());
        assert!(Probabilities::uniform(3).is_uniform());
    }

    #[test]
    fn frequencies_follow_p() {
        let p = Probabilities::new(vec![0.5, 0.3, 0.2], false).unwrap();
        let mut source = BernoulliSource::new(&p, 11, Lane::Letters, 0);
        let mut counts = [0usize; 3];
        for _ in 0..100_000 {
            counts[source.next_letter() as usize - 1] += 1;
        }
        assert_eq!(source.drawn(), 100_000);
        for (c, &pi) in counts.iter().zip(p.as_slice()) {
            assert!((*c as f64 / 1e5 - pi).abs() < 0.01);
        }
    }
}
