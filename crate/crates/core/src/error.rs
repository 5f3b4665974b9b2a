use thiserror::Error;

use crate::word::Word;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {ch:?} at position {pos} (only 'a' and 'b' are allowed)")]
    InvalidLetter { ch: char, pos: usize },

    #[error("rotation index {k} out of range for a word of length {len}")]
    RotationOutOfRange { k: usize, len: usize },

    #[error("{0} is not in A_n (needs odd length with one more b than a)")]
    NotInA(Word),

    #[error("{0} is not in D_n (needs a Dyck word followed by a single b)")]
    NotInD(Word),

    #[error("operation needs a non-empty word")]
    EmptyWord,

    #[error("{word} is not a fixed point of gamma: gamma(w) = {image}")]
    NotFixed { word: Word, image: Word },

    #[error("{0} is neither a Dyck word nor a D_n word")]
    NotDyckOrDn(Word),

    #[error("invalid seed array: {0}")]
    InvalidSeed(String),

    #[error("{0} is a pyramid a^k b^k and cannot be peeled")]
    Pyramid(Word),

    #[error(
        "seed recovery failed at level {level}: ({numerator}) / {denominator} is not a non-negative integer"
    )]
    NonIntegralSeed {
        level: usize,
        numerator: i64,
        denominator: i64,
    },

    #[error("decomposition of {word} violates a structural invariant: {detail}")]
    Structure { word: Word, detail: String },

    #[error("no orbit recurrence for {word} within {cap} steps")]
    OrbitOverflow { word: Word, cap: u64 },

    #[error("semilength {n} outside the supported range {min}..={max}")]
    Semilength { n: usize, min: usize, max: usize },

    #[error("word of length {0} does not fit the packed 64-bit key (max 32 letters)")]
    TooLongToPack(usize),
}
