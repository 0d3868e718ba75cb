use thiserror::Error;

use crate::shape::Shape;
use crate::tableau::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("letter {letter} is outside the alphabet 1..={k}")]
    LetterOutOfRange { letter: u32, k: u32 },
    #[error("words have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("truncated points split at different indices ({left} and {right})")]
    SplitMismatch { left: usize, right: usize },
    #[error("operands are over different alphabets (k={left} and k={right})")]
    AlphabetMismatch { left: u32, right: u32 },
    #[error("invalid tableau: {0}")]
    InvalidTableau(Violation),
    #[error("P has shape {p} but Q has shape {q}")]
    ShapeMismatch { p: Shape, q: Shape },
    #[error("shape {shape} has more than {k} rows; no filling over the alphabet exists")]
    ShapeTooDeep { shape: Shape, k: u32 },
    #[error("cannot parse word {input:?}: {reason}")]
    ParseWord { input: String, reason: String },
    #[error("letter {letter} is not admissible here: {reason}")]
    InadmissibleLetter { letter: u32, reason: &'static str },
    #[error("candidate set exceeds the cap of {cap}")]
    CandidateCap { cap: usize },
    #[error("recording history was not retained for this stream")]
    HistoryUnavailable,
}

pub type Result<T> = std::result::Result<T, Error>;
