//! Recovering source letters from an observed recording tableau.
//!
//! The words with recording tableau `Q` are exactly the inverse RSK images
//! of the semistandard fillings of `sh(Q)`. A position is determined when
//! every such word carries the same letter there.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::enumerate::for_each_semistandard;
use crate::equivalence::enumerate_coplactic_class;
use crate::error::{Error, Result};
use crate::rsk::inverse_letters;
use crate::stream::YoungizationState;
use crate::tableau::StandardTableau;
use crate::word::{Alphabet, Letter, Word};

pub const DEFAULT_CANDIDATE_CAP: usize = 1_000_000;

/// Letters fixed by `Q`, with `None` at undetermined positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decoded {
    pub determined: Vec<Option<Letter>>,
    pub candidates: usize,
    pub n: usize,
    #[serde(skip)]
    pub alphabet: Alphabet,
}

impl Decoded {
    pub fn determined_count(&self, upto: usize) -> usize {
        self.determined.iter().take(upto).filter(|d| d.is_some()).count()
    }
}

impl fmt::Display for Decoded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .determined
            .iter()
            .map(|d| d.map_or_else(|| "?".to_owned(), |l| l.to_string()))
            .collect();
        let sep = if self.alphabet.uses_digits() { "" } else { "," };
        f.write_str(&parts.join(sep))
    }
}

fn check_depth(q: &StandardTableau, alphabet: Alphabet) -> Result<()> {
    if q.shape().num_rows() > alphabet.size() as usize {
        return Err(Error::ShapeTooDeep {
            shape: q.shape(),
            k: alphabet.size(),
        });
    }
    Ok(())
}

/// Folds the whole coplactic class of `q` into a per-position agreement mask
/// without storing the class. Aborts once more than `cap` candidates are seen.
pub fn decode(q: &StandardTableau, alphabet: Alphabet, cap: usize) -> Result<Decoded> {
    check_depth(q, alphabet)?;
    let n = q.size();
    let mut determined: Option<Vec<Option<Letter>>> = None;
    let mut candidates = 0usize;
    let flow = for_each_semistandard(&q.shape(), alphabet, |p| {
        candidates += 1;
        if candidates > cap {
            return ControlFlow::Break(());
        }
        let letters = inverse_letters(p.to_vec(), q);
        match determined.as_mut() {
            None => determined = Some(letters.into_iter().map(Some).collect()),
            Some(mask) => {
                for (slot, letter) in mask.iter_mut().zip(letters) {
                    if *slot != Some(letter) {
                        *slot = None;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::CandidateCap { cap });
    }
    let determined = determined.expect("a shape with at most k rows has a filling");
    Ok(Decoded {
        determined,
        candidates,
        n,
        alphabet,
    })
}

/// The coplactic class of an observed `Q`, materialized.
#[derive(Debug, Clone)]
pub struct DecodeState {
    pub q: StandardTableau,
    pub alphabet: Alphabet,
    pub candidates: BTreeSet<Word>,
    pub determined: Vec<Option<Letter>>,
}

impl DecodeState {
    pub fn new(q: StandardTableau, alphabet: Alphabet) -> Result<Self> {
        check_depth(&q, alphabet)?;
        let candidates = enumerate_coplactic_class(&q, alphabet);
        let determined = (0..q.size())
            .map(|i| {
                let mut letters = candidates.iter().map(|w| w.letters()[i]);
                let first = letters.next()?;
                letters.all(|l| l == first).then_some(first)
            })
            .collect();
        Ok(Self {
            q,
            alphabet,
            candidates,
            determined,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeterminationPoint {
    pub n: usize,
    pub candidates: usize,
    /// Fraction of positions `1..=n` fixed by `Q_n`.
    pub fraction_all: f64,
    /// Fraction of positions `1..=n/2` fixed by `Q_n`; 1 when `n < 2`.
    pub fraction_half: f64,
}

/// Decodes `Q_n(x)` at each grid point `n <= |x|`.
pub fn determination_curve(x: &Word, grid: &[usize], cap: usize) -> Result<Vec<DeterminationPoint>> {
    let state = YoungizationState::from_word(x);
    grid.iter()
        .filter(|&&n| n <= x.len())
        .map(|&n| {
            let decoded = decode(&state.q_prefix(n)?, x.alphabet(), cap)?;
            let half = n / 2;
            let fraction = |upto: usize| {
                if upto == 0 {
                    1.0
                } else {
                    decoded.determined_count(upto) as f64 / upto as f64
                }
            };
            Ok(DeterminationPoint {
                n,
                candidates: decoded.candidates,
                fraction_all: fraction(n),
                fraction_half: fraction(half),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: Vec<Vec<Letter>>) -> StandardTableau {
        StandardTableau::new(rows).unwrap()
    }

    #[test]
    fn decode_examples() {
        let k2 = Alphabet::new(2).unwrap();
        let d = decode(&q(vec![vec![1], vec![2]]), k2, DEFAULT_CANDIDATE_CAP).unwrap();
        assert_eq!((d.to_string(), d.candidates), ("21".to_owned(), 1));
        let d = decode(&q(vec![vec![1, 3], vec![2]]), k2, DEFAULT_CANDIDATE_CAP).unwrap();
        assert_eq!((d.to_string(), d.candidates), ("21?".to_owned(), 2));
        let k1 = Alphabet::new(1).unwrap();
        let d = decode(&q(vec![vec![1]]), k1, DEFAULT_CANDIDATE_CAP).unwrap();
        assert_eq!((d.to_string(), d.candidates), ("1".to_owned(), 1));
    }

    #[test]
    fn decode_errors() {
        let k1 = Alphabet::new(1).unwrap();
        assert!(matches!(
            decode(&q(vec![vec![1], vec![2]]), k1, 10),
            Err(Error::ShapeTooDeep { .. })
        ));
        let k3 = Alphabet::new(3).unwrap();
        assert_eq!(
            decode(&q(vec![vec![1, 2, 3]]), k3, 5),
            Err(Error::CandidateCap { cap: 5 })
        );
        assert!(decode(&q(vec![vec![1, 2, 3]]), k3, 10).is_ok());
    }

    #[test]
    fn decode_json() {
        let k2 = Alphabet::new(2).unwrap();
        let d = decode(&q(vec![vec![1, 3], vec![2]]), k2, 10).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"determined":[2,1,null],"candidates":2,"n":3}"#
        );
    }

    #[test]
    fn state_agrees_with_streaming_decode() {
        let k3 = Alphabet::new(3).unwrap();
        let t = q(vec![vec![1, 3, 4], vec![2, 6], vec![5]]);
        let state = DecodeState::new(t.clone(), k3).unwrap();
        let d = decode(&t, k3, 100).unwrap();
        assert_eq!(state.candidates.len(), d.candidates);
        assert_eq!(state.determined, d.determined);
    }

    #[test]
    fn curve_examples() {
        let k2 = Alphabet::new(2).unwrap();
        let c = determination_curve(&Word::parse("21", k2).unwrap(), &[2], 10).unwrap();
        assert_eq!((c[0].fraction_all, c[0].fraction_half), (1.0, 1.0));
        let c = determination_curve(&Word::parse("211", k2).unwrap(), &[3], 10).unwrap();
        assert!((c[0].fraction_all - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(c[0].fraction_half, 1.0);
        let k1 = Alphabet::new(1).unwrap();
        let c = determination_curve(&Word::parse("1", k1).unwrap(), &[1, 5], 10).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].fraction_all, 1.0);
    }
}
