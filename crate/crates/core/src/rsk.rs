//! Forward and inverse Robinson–Schensted–Knuth correspondence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::Shape;
use crate::tableau::{insert_into_rows, reverse_bump, SemistandardTableau, StandardTableau};
use crate::word::{Alphabet, Letter, Word};

/// `(P, Q)`: insertion tableau and recording tableau of the same shape.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct RskPair {
    p: SemistandardTableau,
    q: StandardTableau,
}

#[derive(Deserialize)]
struct RawPair {
    p: SemistandardTableau,
    q: StandardTableau,
}

impl TryFrom<RawPair> for RskPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        RskPair::new(raw.p, raw.q)
    }
}

impl RskPair {
    pub fn new(p: SemistandardTableau, q: StandardTableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::ShapeMismatch {
                p: p.shape(),
                q: q.shape(),
            });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &SemistandardTableau {
        &self.p
    }

    pub fn q(&self) -> &StandardTableau {
        &self.q
    }

    pub fn shape(&self) -> Shape {
        self.p.shape()
    }

    pub fn into_parts(self) -> (SemistandardTableau, StandardTableau) {
        (self.p, self.q)
    }
}

/// Inserts the letters of `w` one at a time, recording step `n` in the cell
/// created by the `n`-th insertion.
pub fn rsk(w: &Word) -> RskPair {
    let mut p: Vec<Vec<Letter>> = Vec::new();
    let mut q: Vec<Vec<Letter>> = Vec::new();
    for (step, &letter) in w.letters().iter().enumerate() {
        let cell = insert_into_rows(&mut p, letter);
        if cell.row > q.len() {
            q.push(Vec::new());
        }
        q[cell.row - 1].push(step as Letter + 1);
    }
    RskPair {
        p: SemistandardTableau::from_rows_unchecked(p),
        q: StandardTableau::from_rows_unchecked(q),
    }
}

/// Recovers the unique word over `alphabet` whose RSK image is `pair`.
pub fn rsk_inverse(pair: &RskPair, alphabet: Alphabet) -> Result<Word> {
    pair.p.check_alphabet(alphabet)?;
    let letters = inverse_letters(pair.p.rows().to_vec(), &pair.q);
    Ok(Word::new(letters, alphabet).expect("reverse bumping stays inside the alphabet"))
}

/// Reverse bumping driver shared with the class enumerators: `p` must be a
/// semistandard filling of the shape of `q`.
pub(crate) fn inverse_letters(mut p: Vec<Vec<Letter>>, q: &StandardTableau) -> Vec<Letter> {
    let positions = q.positions();
    let mut letters = vec![0; positions.len()];
    for (slot, cell) in letters.iter_mut().zip(&positions).rev() {
        *slot = reverse_bump(&mut p, cell.row);
    }
    letters
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::parse(s, Alphabet::new(2).unwrap()).unwrap()
    }

    fn pair(p: Vec<Vec<Letter>>, q: Vec<Vec<Letter>>) -> RskPair {
        RskPair::new(SemistandardTableau::new(p).unwrap(), StandardTableau::new(q).unwrap()).unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(rsk(&word("21")), pair(vec![vec![1], vec![2]], vec![vec![1], vec![2]]));
        assert_eq!(
            rsk(&word("211")),
            pair(vec![vec![1, 1], vec![2]], vec![vec![1, 3], vec![2]])
        );
        assert_eq!(rsk(&word("")), RskPair::default());
    }

    #[test]
    fn inverse_examples() {
        let a = Alphabet::new(2).unwrap();
        let w = rsk_inverse(&pair(vec![vec![1, 2], vec![2]], vec![vec![1, 3], vec![2]]), a).unwrap();
        assert_eq!(w.to_string(), "212");
        let w = rsk_inverse(&pair(vec![vec![1, 1], vec![2]], vec![vec![1, 2], vec![3]]), a).unwrap();
        assert_eq!(w.to_string(), "121");
        assert!(rsk_inverse(&RskPair::default(), a).unwrap().is_empty());
    }

    #[test]
    fn malformed_pairs_are_rejected() {
        let p = SemistandardTableau::new(vec![vec![1, 1]]).unwrap();
        let q = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        assert!(matches!(RskPair::new(p, q), Err(Error::ShapeMismatch { .. })));

        let bad = r#"{"p":{"rows":[[2,1]]},"q":{"rows":[[1,2]]}}"#;
        assert!(serde_json::from_str::<RskPair>(bad).is_err());
        let mismatched = r#"{"p":{"rows":[[1,1]]},"q":{"rows":[[1],[2]]}}"#;
        assert!(serde_json::from_str::<RskPair>(mismatched).is_err());

        let p = pair(vec![vec![1, 3]], vec![vec![1, 2]]);
        assert!(rsk_inverse(&p, Alphabet::new(2).unwrap()).is_err());
    }

    #[test]
    fn pair_json_shape() {
        let json = serde_json::to_string(&rsk(&word("211"))).unwrap();
        assert_eq!(json, r#"{"p":{"rows":[[1,1],[2]]},"q":{"rows":[[1,3],[2]]}}"#);
        let back: RskPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rsk(&word("211")));
    }
}
