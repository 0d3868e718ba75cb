//! One-letter-at-a-time youngization.
//!
//! A row of a semistandard tableau is weakly increasing, so it is fully
//! described by its letter multiplicities. The state keeps `k` counters per
//! row (at most `k` rows), which makes each insertion `O(k^2)` regardless of
//! how long the rows have grown, and keeps memory independent of `n` apart
//! from the recorded growth sequence.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rsk::RskPair;
use crate::shape::Shape;
use crate::tableau::{SemistandardTableau, StandardTableau};
use crate::word::{Alphabet, Letter, Word};

/// How much of the growth sequence (equivalently, of `Q`) to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Retention {
    /// Keep every step; `Q_n` and the full shape history are available.
    #[default]
    Full,
    /// Keep only the most recent steps.
    Window(usize),
}

/// One step of the shape process.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeEvent {
    pub step: usize,
    /// 1-based.
    pub row_incremented: usize,
    pub new_shape: Shape,
}

/// Current shape as a point of the Weyl chamber `x_1 >= ... >= x_k >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylPoint {
    pub coords: Vec<usize>,
}

impl WeylPoint {
    /// `λ_1 - λ_2`, the coordinate of the one-dimensional walk when `k = 2`.
    pub fn gap(&self) -> Option<usize> {
        match self.coords.as_slice() {
            [a, b] => Some(a - b),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungizationState {
    alphabet: Alphabet,
    /// `counts[r][l - 1]`: copies of letter `l` in row `r` of `P_n`.
    counts: Vec<Vec<usize>>,
    shape: Vec<usize>,
    n: usize,
    retention: Retention,
    /// 0-based row that grew at each retained step.
    growth: VecDeque<u32>,
}

impl YoungizationState {
    pub fn new(alphabet: Alphabet) -> Self {
        Self::with_retention(alphabet, Retention::Full)
    }

    pub fn with_retention(alphabet: Alphabet, retention: Retention) -> Self {
        Self {
            alphabet,
            counts: Vec::new(),
            shape: Vec::new(),
            n: 0,
            retention,
            growth: VecDeque::new(),
        }
    }

    /// Streams a whole word through a fresh state.
    pub fn from_word(w: &Word) -> Self {
        let mut state = Self::new(w.alphabet());
        for &letter in w.letters() {
            state.insert(letter);
        }
        state
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Number of letters consumed.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn retention(&self) -> Retention {
        self.retention
    }

    /// Inserts one letter and returns the 0-based row that grew.
    fn insert(&mut self, letter: Letter) -> usize {
        let k = self.alphabet.size() as usize;
        let mut x = letter as usize;
        let mut grown = self.counts.len();
        for (r, row) in self.counts.iter_mut().enumerate() {
            match (x + 1..=k).find(|&y| row[y - 1] > 0) {
                Some(y) => {
                    row[y - 1] -= 1;
                    row[x - 1] += 1;
                    x = y;
                }
                None => {
                    row[x - 1] += 1;
                    grown = r;
                    break;
                }
            }
        }
        if grown == self.counts.len() {
            let mut row = vec![0; k];
            row[x - 1] = 1;
            self.counts.push(row);
            self.shape.push(1);
        } else {
            self.shape[grown] += 1;
        }
        self.n += 1;
        self.growth.push_back(grown as u32);
        if let Retention::Window(w) = self.retention {
            while self.growth.len() > w {
                self.growth.pop_front();
            }
        }
        grown
    }

    /// Inserts `letter`; returns the 1-based row that grew. The state is
    /// untouched on error.
    pub fn push_letter(&mut self, letter: Letter) -> Result<usize> {
        self.alphabet.check(letter)?;
        Ok(self.insert(letter) + 1)
    }

    pub fn push(&mut self, letter: Letter) -> Result<ShapeEvent> {
        let row = self.push_letter(letter)?;
        Ok(ShapeEvent {
            step: self.n,
            row_incremented: row,
            new_shape: self.shape(),
        })
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.shape.clone()).expect("row lengths stay a partition")
    }

    /// Row lengths without allocating a [`Shape`].
    pub fn row_lengths(&self) -> &[usize] {
        &self.shape
    }

    /// Letter multiplicities of the first row of `P_n`, indexed by `letter - 1`.
    pub fn first_row(&self) -> Vec<usize> {
        self.counts
            .first()
            .cloned()
            .unwrap_or_else(|| vec![0; self.alphabet.size() as usize])
    }

    /// Letter multiplicities of every row of `P_n`.
    pub fn row_contents(&self) -> &[Vec<usize>] {
        &self.counts
    }

    /// `m_n(ℓ)`: copies of `ℓ` in the first row of `P_n`, for `2 <= ℓ <= k`.
    pub fn m_count(&self, ell: Letter) -> Result<usize> {
        self.alphabet.check(ell)?;
        if ell < 2 {
            return Err(Error::InadmissibleLetter {
                letter: ell,
                reason: "first-row counts are tracked for letters 2..=k",
            });
        }
        Ok(self.counts.first().map_or(0, |row| row[ell as usize - 1]))
    }

    /// `a_n(ℓ)`: the greatest letter below `ℓ` in the first row of `P_n`, or 1
    /// if there is none.
    pub fn greatest_below_in_first_row(&self, ell: Letter) -> Letter {
        let Some(row) = self.counts.first() else { return 1 };
        (1..ell).rev().find(|&l| row[l as usize - 1] > 0).unwrap_or(1)
    }

    pub fn weyl_coordinate(&self) -> WeylPoint {
        WeylPoint {
            coords: self.shape().padded(self.alphabet.size() as usize),
        }
    }

    /// `P_n` as a tableau.
    pub fn p_tableau(&self) -> SemistandardTableau {
        let rows = self
            .counts
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(l, &c)| std::iter::repeat_n(l as Letter + 1, c))
                    .collect()
            })
            .collect();
        SemistandardTableau::from_rows_unchecked(rows)
    }

    /// `Q_n` as a tableau; needs full retention.
    pub fn q_tableau(&self) -> Result<StandardTableau> {
        if self.growth.len() != self.n {
            return Err(Error::HistoryUnavailable);
        }
        Ok(
            StandardTableau::from_growth(self.growth.iter().map(|&r| r as usize + 1))
                .expect("recorded growth is a valid path"),
        )
    }

    /// `Q_m` for `m <= n`; needs full retention.
    pub fn q_prefix(&self, m: usize) -> Result<StandardTableau> {
        if self.growth.len() != self.n {
            return Err(Error::HistoryUnavailable);
        }
        Ok(
            StandardTableau::from_growth(self.growth.iter().take(m).map(|&r| r as usize + 1))
                .expect("recorded growth is a valid path"),
        )
    }

    /// `(P_n, Q_n)`; equals the batch RSK of the consumed prefix.
    pub fn snapshot(&self) -> Result<RskPair> {
        RskPair::new(self.p_tableau(), self.q_tableau()?)
    }

    /// Shapes along the retained part of the path, oldest first and ending
    /// with the current shape. With full retention this is `λ^(0), ..., λ^(n)`.
    pub fn shape_history(&self) -> Vec<Shape> {
        let mut rows = self.shape.clone();
        let mut out = vec![self.shape()];
        for &r in self.growth.iter().rev() {
            let r = r as usize;
            rows[r] -= 1;
            if rows[r] == 0 {
                rows.pop();
            }
            out.push(Shape::new(rows.clone()).expect("undoing growth keeps a partition"));
        }
        out.reverse();
        out
    }

    /// Whether the two states currently hold the same `P` tableau.
    pub fn same_p(&self, other: &Self) -> bool {
        self.counts == other.counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsk::rsk;

    fn k2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn after(s: &str) -> YoungizationState {
        YoungizationState::from_word(&Word::parse(s, k2()).unwrap())
    }

    #[test]
    fn push_examples() {
        let mut s = YoungizationState::new(k2());
        let e = s.push(2).unwrap();
        assert_eq!((e.step, e.row_incremented, e.new_shape.rows()), (1, 1, &[1][..]));
        let e = s.push(1).unwrap();
        assert_eq!((e.row_incremented, e.new_shape.rows()), (2, &[1, 1][..]));
        let e = s.push(1).unwrap();
        assert_eq!((e.row_incremented, e.new_shape.rows()), (1, &[2, 1][..]));
    }

    #[test]
    fn failed_push_leaves_state_unchanged() {
        let mut s = after("21");
        let before = s.clone();
        assert_eq!(s.push(3), Err(Error::LetterOutOfRange { letter: 3, k: 2 }));
        assert_eq!(s, before);
    }

    #[test]
    fn m_count_examples() {
        assert_eq!(after("2").m_count(2).unwrap(), 1);
        assert_eq!(after("21").m_count(2).unwrap(), 0);
        assert_eq!(after("212").m_count(2).unwrap(), 1);
        assert!(after("2").m_count(1).is_err());
        assert!(after("2").m_count(3).is_err());
    }

    #[test]
    fn weyl_examples() {
        let p = after("21").weyl_coordinate();
        assert_eq!((p.coords.as_slice(), p.gap()), (&[1, 1][..], Some(0)));
        let p = after("").weyl_coordinate();
        assert_eq!((p.coords.as_slice(), p.gap()), (&[0, 0][..], Some(0)));
        let p = after("11").weyl_coordinate();
        assert_eq!((p.coords.as_slice(), p.gap()), (&[2, 0][..], Some(2)));
        let k3 = Alphabet::new(3).unwrap();
        assert_eq!(YoungizationState::new(k3).weyl_coordinate().gap(), None);
    }

    #[test]
    fn snapshot_examples() {
        assert_eq!(after("").snapshot().unwrap(), RskPair::default());
        for s in ["211", "21", "2212112"] {
            assert_eq!(after(s).snapshot().unwrap(), rsk(&Word::parse(s, k2()).unwrap()));
        }
    }

    #[test]
    fn greatest_below() {
        let k3 = Alphabet::new(3).unwrap();
        let s = YoungizationState::from_word(&Word::parse("133", k3).unwrap());
        assert_eq!(s.greatest_below_in_first_row(3), 1);
        let s = YoungizationState::from_word(&Word::parse("3", k3).unwrap());
        assert_eq!(s.greatest_below_in_first_row(3), 1);
        let s = YoungizationState::from_word(&Word::parse("123", k3).unwrap());
        assert_eq!(s.greatest_below_in_first_row(3), 2);
    }

    #[test]
    fn windowed_retention() {
        let mut s = YoungizationState::with_retention(k2(), Retention::Window(2));
        for l in [2, 1, 1, 2] {
            s.push(l).unwrap();
        }
        assert_eq!(s.q_tableau(), Err(Error::HistoryUnavailable));
        let history: Vec<Vec<usize>> = s.shape_history().iter().map(|sh| sh.rows().to_vec()).collect();
        assert_eq!(history, vec![vec![1, 1], vec![2, 1], vec![3, 1]]);
        assert_eq!(s.p_tableau().rows(), &[vec![1, 1, 2], vec![2]]);
    }

    #[test]
    fn full_history_starts_empty() {
        let history = after("211").shape_history();
        let rows: Vec<&[usize]> = history.iter().map(|s| s.rows()).collect();
        assert_eq!(rows, vec![&[][..], &[1], &[1, 1], &[2, 1]]);
    }

    #[test]
    fn event_json() {
        let e = YoungizationState::new(k2()).push(2).unwrap();
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"step":1,"row_incremented":1,"new_shape":[1]}"#
        );
    }
}
