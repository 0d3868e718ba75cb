//! Equivalence predicates and class enumerators on words and truncated
//! points: Bernoulli cylinder/tail, plactic/coplactic, de Finetti orbits
//! and the Young tail relation.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::enumerate::{for_each_semistandard, standard_tableaux};
use crate::error::{Error, Result};
use crate::rsk::{inverse_letters, rsk};
use crate::stream::YoungizationState;
use crate::tableau::{SemistandardTableau, StandardTableau};
use crate::word::{Alphabet, Word};

/// A finite stand-in for an infinite sequence split at index `n`: the prefix
/// `[x]_n` and a finite window of the tail `{x}_{n+1}`. The tail length is
/// the horizon of every "for all `N >= n`" check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedPoint {
    prefix: Word,
    tail: Word,
}

impl TruncatedPoint {
    pub fn new(prefix: Word, tail: Word) -> Result<Self> {
        if prefix.alphabet() != tail.alphabet() {
            return Err(Error::AlphabetMismatch {
                left: prefix.alphabet().size(),
                right: tail.alphabet().size(),
            });
        }
        Ok(Self { prefix, tail })
    }

    /// Splits `word` after its first `n` letters.
    pub fn split(word: &Word, n: usize) -> Self {
        Self {
            prefix: word.prefix(n),
            tail: word.suffix(n),
        }
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn tail(&self) -> &Word {
        &self.tail
    }

    pub fn split_index(&self) -> usize {
        self.prefix.len()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.prefix.alphabet()
    }

    /// Prefix followed by tail.
    pub fn word(&self) -> Word {
        self.prefix.concat(&self.tail).expect("same alphabet by construction")
    }

    /// Last step covered by the finite tail.
    pub fn horizon(&self) -> usize {
        self.prefix.len() + self.tail.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BernoulliPartition {
    /// Same initial segment of length `n`.
    Cylinder,
    /// Same tail from position `n + 1` on.
    Tail,
}

fn same_length(u: &Word, v: &Word) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(())
}

fn same_split(a: &TruncatedPoint, b: &TruncatedPoint) -> Result<()> {
    if a.split_index() != b.split_index() {
        return Err(Error::SplitMismatch {
            left: a.split_index(),
            right: b.split_index(),
        });
    }
    Ok(())
}

/// `P(u) = P(v)`.
pub fn plactic_equivalent(u: &Word, v: &Word) -> Result<bool> {
    same_length(u, v)?;
    Ok(rsk(u).p() == rsk(v).p())
}

/// `Q(u) = Q(v)`.
pub fn coplactic_equivalent(u: &Word, v: &Word) -> Result<bool> {
    same_length(u, v)?;
    Ok(rsk(u).q() == rsk(v).q())
}

/// Every word with insertion tableau `t`: one per standard tableau of its shape.
pub fn enumerate_plactic_class(t: &SemistandardTableau, alphabet: Alphabet) -> Result<BTreeSet<Word>> {
    t.check_alphabet(alphabet)?;
    Ok(standard_tableaux(&t.shape())
        .iter()
        .map(|q| Word::new(inverse_letters(t.rows().to_vec(), q), alphabet).expect("letters come from t"))
        .collect())
}

/// Every word over the alphabet with recording tableau `t`: one per
/// semistandard filling of its shape. Empty when the shape has more than `k` rows.
pub fn enumerate_coplactic_class(t: &StandardTableau, alphabet: Alphabet) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let _ = for_each_semistandard(&t.shape(), alphabet, |p| {
        let letters = inverse_letters(p.to_vec(), t);
        out.insert(Word::new(letters, alphabet).expect("filling is over the alphabet"));
        ControlFlow::Continue(())
    });
    out
}

/// Orbit relation of the permutations of the first `n` coordinates: equal
/// prefix content and identical tails.
pub fn de_finetti_equivalent(a: &TruncatedPoint, b: &TruncatedPoint) -> Result<bool> {
    same_split(a, b)?;
    Ok(a.prefix.content() == b.prefix.content() && a.tail.letters() == b.tail.letters())
}

/// Plactic-equivalent prefixes and identical tails.
pub fn young_tail_equivalent(a: &TruncatedPoint, b: &TruncatedPoint) -> Result<bool> {
    same_split(a, b)?;
    same_length(&a.tail, &b.tail)?;
    Ok(a.tail.letters() == b.tail.letters() && plactic_equivalent(&a.prefix, &b.prefix)?)
}

pub fn bernoulli_partitions(a: &TruncatedPoint, b: &TruncatedPoint, which: BernoulliPartition) -> Result<bool> {
    same_split(a, b)?;
    Ok(match which {
        BernoulliPartition::Cylinder => a.prefix.letters() == b.prefix.letters(),
        BernoulliPartition::Tail => a.tail.letters() == b.tail.letters(),
    })
}

/// Streams both points to their horizon and returns the first step
/// `N >= n` at which the shapes differ, or `None` if `sh(P_N)` agrees at
/// every step from the split to the horizon.
pub fn first_shape_disagreement(a: &TruncatedPoint, b: &TruncatedPoint) -> Result<Option<usize>> {
    same_split(a, b)?;
    same_length(&a.tail, &b.tail)?;
    let mut x = YoungizationState::new(a.alphabet());
    let mut y = YoungizationState::new(b.alphabet());
    for (&l, &m) in a.prefix.letters().iter().zip(b.prefix.letters()) {
        x.push_letter(l)?;
        y.push_letter(m)?;
    }
    let n = a.split_index();
    if x.shape() != y.shape() {
        return Ok(Some(n));
    }
    for (step, (&l, &m)) in a.tail.letters().iter().zip(b.tail.letters()).enumerate() {
        x.push_letter(l)?;
        y.push_letter(m)?;
        if x.shape() != y.shape() {
            return Ok(Some(n + step + 1));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, Alphabet::new(2).unwrap()).unwrap()
    }

    fn pt(prefix: &str, tail: &str) -> TruncatedPoint {
        TruncatedPoint::new(w(prefix), w(tail)).unwrap()
    }

    #[test]
    fn plactic_examples() {
        assert!(plactic_equivalent(&w("211"), &w("121")).unwrap());
        assert!(!plactic_equivalent(&w("211"), &w("212")).unwrap());
        assert!(plactic_equivalent(&w("12"), &w("12")).unwrap());
        assert_eq!(
            plactic_equivalent(&w("12"), &w("1")),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn coplactic_examples() {
        assert!(coplactic_equivalent(&w("211"), &w("212")).unwrap());
        assert!(!coplactic_equivalent(&w("211"), &w("121")).unwrap());
        assert!(!coplactic_equivalent(&w("21"), &w("12")).unwrap());
        assert!(coplactic_equivalent(&w("21"), &w("")).is_err());
    }

    #[test]
    fn plactic_class_examples() {
        let k2 = Alphabet::new(2).unwrap();
        let t = SemistandardTableau::new(vec![vec![1, 1], vec![2]]).unwrap();
        let class: Vec<String> = enumerate_plactic_class(&t, k2)
            .unwrap()
            .iter()
            .map(Word::to_string)
            .collect();
        assert_eq!(class, ["121", "211"]);
        let t = SemistandardTableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(enumerate_plactic_class(&t, k2).unwrap(), BTreeSet::from([w("12")]));
        let empty = enumerate_plactic_class(&SemistandardTableau::empty(), k2).unwrap();
        assert_eq!(empty, BTreeSet::from([w("")]));
        let t = SemistandardTableau::new(vec![vec![3]]).unwrap();
        assert!(enumerate_plactic_class(&t, k2).is_err());
    }

    #[test]
    fn coplactic_class_examples() {
        let k2 = Alphabet::new(2).unwrap();
        let t = StandardTableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(enumerate_coplactic_class(&t, k2), BTreeSet::from([w("211"), w("212")]));
        let t = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(enumerate_coplactic_class(&t, k2), BTreeSet::from([w("21")]));
        let k1 = Alphabet::new(1).unwrap();
        let t = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        let class: Vec<String> = enumerate_coplactic_class(&t, k1).iter().map(Word::to_string).collect();
        assert_eq!(class, ["11"]);
        let deep = StandardTableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert!(enumerate_coplactic_class(&deep, k2).is_empty());
    }

    #[test]
    fn de_finetti_examples() {
        assert!(de_finetti_equivalent(&pt("12", "221"), &pt("21", "221")).unwrap());
        assert!(!de_finetti_equivalent(&pt("11", "2"), &pt("12", "2")).unwrap());
        assert!(!de_finetti_equivalent(&pt("12", "1"), &pt("21", "2")).unwrap());
        assert_eq!(
            de_finetti_equivalent(&pt("12", "1"), &pt("1", "21")),
            Err(Error::SplitMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn young_tail_examples() {
        assert!(young_tail_equivalent(&pt("211", "12"), &pt("121", "12")).unwrap());
        assert!(!young_tail_equivalent(&pt("211", "12"), &pt("212", "12")).unwrap());
        assert!(young_tail_equivalent(&pt("21", ""), &pt("21", "")).unwrap());
        assert!(young_tail_equivalent(&pt("21", "1"), &pt("21", "12")).is_err());
        assert_eq!(
            first_shape_disagreement(&pt("211", "12"), &pt("121", "12")).unwrap(),
            None
        );
        assert_eq!(
            first_shape_disagreement(&pt("12", "1"), &pt("11", "1")).unwrap(),
            Some(3)
        );
    }

    #[test]
    fn bernoulli_examples() {
        use BernoulliPartition::*;
        assert!(bernoulli_partitions(&pt("12", "1"), &pt("12", "2"), Cylinder).unwrap());
        assert!(bernoulli_partitions(&pt("12", "221"), &pt("21", "221"), Tail).unwrap());
        assert!(!bernoulli_partitions(&pt("12", "1"), &pt("21", "1"), Cylinder).unwrap());
    }

    #[test]
    fn mixed_alphabets_are_rejected() {
        let k3 = Alphabet::new(3).unwrap();
        assert!(TruncatedPoint::new(w("12"), Word::parse("3", k3).unwrap()).is_err());
    }
}
