//! Young tableaux, the RSK correspondence and its streaming form over
//! finite ordered alphabets.
//!
//! - [`tableau`], [`rsk`]: tableaux, row insertion, forward and inverse RSK.
//! - [`equivalence`]: plactic, coplactic, de Finetti and tail relations, with
//!   class enumeration through inverse RSK.
//! - [`binary`]: the bracketing calculus for two-letter words.
//! - [`stream`]: incremental insertion exposing the shape process.
//! - [`decoder`]: letters of a source word fixed by its recording tableau.

pub mod binary;
pub mod decoder;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod rsk;
pub mod shape;
pub mod stream;
pub mod tableau;
pub mod word;

pub use binary::{bracket, eta_equivalent_binary, rank, xi_equivalent_binary, BracketAnalysis};
pub use decoder::{decode, determination_curve, DecodeState, Decoded, DeterminationPoint, DEFAULT_CANDIDATE_CAP};
pub use enumerate::{semistandard_tableaux, standard_tableaux};
pub use equivalence::{
    bernoulli_partitions, coplactic_equivalent, de_finetti_equivalent, enumerate_coplactic_class,
    enumerate_plactic_class, plactic_equivalent, young_tail_equivalent, BernoulliPartition, TruncatedPoint,
};
pub use error::{Error, Result};
pub use rsk::{rsk, rsk_inverse, RskPair};
pub use shape::Shape;
pub use stream::{Retention, ShapeEvent, WeylPoint, YoungizationState};
pub use tableau::{
    validate, Cell, SemistandardTableau, StandardTableau, Tableau, TableauKind, Violation, ViolationKind,
};
pub use word::{Alphabet, Letter, Word};
