//! Bracketing calculus for words over `{1, 2}`.
//!
//! Every adjacent factor `21` is bracketed, the bracketed letters are
//! removed, and the procedure repeats until the remaining letters read
//! `1^a 2^b`. The number of brackets is the rank; it equals the length of
//! the second row of the RSK shape.

use serde::Serialize;

use crate::equivalence::TruncatedPoint;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketAnalysis {
    #[serde(skip)]
    pub word: Word,
    pub rank: usize,
    /// 1-based `(i, j)` with `w_i = 2`, `w_j = 1`, sorted by `i`.
    pub pairs: Vec<(usize, usize)>,
    /// 1-based unmatched positions, increasing.
    #[serde(rename = "free")]
    pub free_indices: Vec<usize>,
}

impl BracketAnalysis {
    /// Positions `j` of the 1's that close a bracket.
    pub fn paired_ones(&self) -> Vec<usize> {
        let mut ones: Vec<usize> = self.pairs.iter().map(|&(_, j)| j).collect();
        ones.sort_unstable();
        ones
    }

    /// The word read on the free positions, which always has the form `1^a 2^b`.
    pub fn free_subword(&self) -> Vec<u32> {
        self.free_indices.iter().map(|&i| self.word.letters()[i - 1]).collect()
    }
}

fn check_binary(w: &Word) -> Result<()> {
    for &letter in w.letters() {
        Alphabet::BINARY.check(letter)?;
    }
    Ok(())
}

/// Brackets `w` with a single stack pass: each `2` is pushed, each `1` closes
/// the most recent open `2`. This matches exactly the iterated removal of
/// adjacent `21` factors.
pub fn bracket(w: &Word) -> Result<BracketAnalysis> {
    check_binary(w)?;
    let mut open = Vec::new();
    let mut pairs = Vec::new();
    let mut free_ones = Vec::new();
    for (i, &letter) in w.letters().iter().enumerate() {
        let pos = i + 1;
        if letter == 2 {
            open.push(pos);
        } else if let Some(two) = open.pop() {
            pairs.push((two, pos));
        } else {
            free_ones.push(pos);
        }
    }
    pairs.sort_unstable();
    let mut free_indices = free_ones;
    free_indices.extend(open);
    free_indices.sort_unstable();
    Ok(BracketAnalysis {
        word: w.clone(),
        rank: pairs.len(),
        pairs,
        free_indices,
    })
}

pub fn rank(w: &Word) -> Result<usize> {
    Ok(bracket(w)?.rank)
}

/// Same bracket positions, which forces the same letters at paired positions.
pub fn xi_equivalent_binary(u: &Word, v: &Word) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(bracket(u)?.pairs == bracket(v)?.pairs)
}

/// Equal rank, equal letter multiplicities in the prefixes, identical tails.
pub fn eta_equivalent_binary(a: &TruncatedPoint, b: &TruncatedPoint) -> Result<bool> {
    if a.split_index() != b.split_index() {
        return Err(Error::SplitMismatch {
            left: a.split_index(),
            right: b.split_index(),
        });
    }
    check_binary(a.tail())?;
    check_binary(b.tail())?;
    let same_rank = rank(a.prefix())? == rank(b.prefix())?;
    let count = |w: &Word| w.letters().iter().filter(|&&l| l == 1).count();
    let same_content = count(a.prefix()) == count(b.prefix());
    Ok(same_rank && same_content && a.tail().letters() == b.tail().letters())
}
