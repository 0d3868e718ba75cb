//! Per-trial random streams.
//!
//! Every trial draws from ChaCha8 keyed by the master seed and a lane
//! (letters, auxiliary coins, permutations, ...), with the trial index as
//! the ChaCha stream id. A trial's randomness therefore depends only on
//! `(seed, lane, trial)`, never on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lane {
    Letters,
    /// A second, independent letter stream (the `y` of a pair).
    LettersAlt,
    Coins,
    Choices,
}

impl Lane {
    fn tag(self) -> u64 {
        match self {
            Lane::Letters => 0x6c65_7474_6572_7331,
            Lane::LettersAlt => 0x6c65_7474_6572_7332,
            Lane::Coins => 0x636f_696e_7300_0001,
            Lane::Choices => 0x6368_6f69_6365_0001,
        }
    }
}

pub fn trial_rng(seed: u64, lane: Lane, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ lane.tag());
    rng.set_stream(trial);
    rng
}
