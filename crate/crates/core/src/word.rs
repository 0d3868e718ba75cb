//! Alphabets and finite words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of the alphabet `{1, ..., k}`.
pub type Letter = u32;

/// The ordered alphabet `{1, 2, ..., k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Alphabet {
    k: u32,
}

impl Alphabet {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self { k })
    }

    /// The binary alphabet `{1, 2}`.
    pub const BINARY: Alphabet = Alphabet { k: 2 };

    pub fn size(self) -> u32 {
        self.k
    }

    pub fn contains(self, letter: Letter) -> bool {
        (1..=self.k).contains(&letter)
    }

    pub fn check(self, letter: Letter) -> Result<Letter> {
        if self.contains(letter) {
            Ok(letter)
        } else {
            Err(Error::LetterOutOfRange { letter, k: self.k })
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        1..=self.k
    }

    /// Every word of length `n` over this alphabet, in lexicographic order.
    pub fn words(self, n: usize) -> impl Iterator<Item = Word> {
        let k = self.k as u64;
        let total = k.checked_pow(n as u32).expect("word count overflows u64");
        (0..total).map(move |mut index| {
            let mut letters = vec![1; n];
            for slot in letters.iter_mut().rev() {
                *slot = (index % k) as Letter + 1;
                index /= k;
            }
            Word {
                letters,
                alphabet: self,
            }
        })
    }

    /// Whether words over this alphabet print as bare digit strings.
    pub fn uses_digits(self) -> bool {
        self.k <= 9
    }
}

impl TryFrom<u32> for Alphabet {
    type Error = Error;

    fn try_from(k: u32) -> Result<Self> {
        Alphabet::new(k)
    }
}

impl From<Alphabet> for u32 {
    fn from(a: Alphabet) -> u32 {
        a.k
    }
}

/// A finite word over an [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Self> {
        for &letter in &letters {
            alphabet.check(letter)?;
        }
        Ok(Self { letters, alphabet })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            letters: Vec::new(),
            alphabet,
        }
    }

    /// Parses a word over the given alphabet.
    ///
    /// Digit strings (`"2113"`) are accepted for alphabets with at most nine
    /// letters; comma-separated integers (`"2,11,3"`) are accepted always.
    pub fn parse(input: &str, alphabet: Alphabet) -> Result<Self> {
        let letters = parse_letters(input, Some(alphabet))?;
        Word::new(letters, alphabet).map_err(|e| Error::ParseWord {
            input: input.to_owned(),
            reason: e.to_string(),
        })
    }

    /// Parses a word and takes the alphabet to be `{1, ..., max letter}`
    /// (or `{1}` for the empty word).
    pub fn parse_inferred(input: &str) -> Result<Self> {
        let letters = parse_letters(input, None)?;
        let k = letters.iter().copied().max().unwrap_or(1);
        Word::new(letters, Alphabet::new(k)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The initial segment `[w]_n`.
    pub fn prefix(&self, n: usize) -> Word {
        Word {
            letters: self.letters[..n].to_vec(),
            alphabet: self.alphabet,
        }
    }

    /// The segment after position `n`, i.e. `w_{n+1} w_{n+2} ...`.
    pub fn suffix(&self, n: usize) -> Word {
        Word {
            letters: self.letters[n..].to_vec(),
            alphabet: self.alphabet,
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.k,
                right: other.alphabet.k,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            letters,
            alphabet: self.alphabet,
        })
    }

    /// Letter multiplicities, indexed by `letter - 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet.k as usize];
        for &letter in &self.letters {
            counts[letter as usize - 1] += 1;
        }
        counts
    }

    /// Same letters over a larger (or equal) alphabet.
    pub fn widen(&self, alphabet: Alphabet) -> Result<Word> {
        Word::new(self.letters.clone(), alphabet)
    }

    /// JSON form: a digit string for `k <= 9`, an integer array otherwise.
    pub fn to_json(&self) -> serde_json::Value {
        if self.alphabet.uses_digits() {
            serde_json::Value::String(self.to_string())
        } else {
            serde_json::Value::from(self.letters.clone())
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.uses_digits() {
            for letter in &self.letters {
                write!(f, "{letter}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

fn parse_letters(input: &str, alphabet: Option<Alphabet>) -> Result<Vec<Letter>> {
    let err = |reason: &str| Error::ParseWord {
        input: input.to_owned(),
        reason: reason.to_owned(),
    };
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    if trimmed.contains(',') {
        return trimmed
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<Letter>()
                    .map_err(|_| err("expected comma-separated integers"))
            })
            .collect();
    }
    if let Some(a) = alphabet {
        if !a.uses_digits() && trimmed.len() > 1 {
            return Err(err(
                "alphabets with more than 9 letters require comma-separated letters",
            ));
        }
    }
    trimmed
        .chars()
        .map(|c| c.to_digit(10).ok_or_else(|| err("expected a digit string")))
        .collect()
}
