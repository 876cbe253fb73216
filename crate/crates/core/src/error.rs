use thiserror::Error;

use crate::factorization::FactorizationKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("words are defined over different alphabets")]
    AlphabetMismatch,
    #[error("symbol {0:#04x} is not in the alphabet")]
    UnknownSymbol(u8),
    #[error("symbol {0:#04x} appears twice in the alphabet order")]
    DuplicateSymbol(u8),
    #[error("an alphabet needs at least one symbol")]
    EmptyAlphabet,
    #[error("expected a {expected} factorization, found {found}")]
    KindMismatch {
        expected: FactorizationKind,
        found: FactorizationKind,
    },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("factorizations do not describe the same word")]
    WordMismatch,
    #[error("position out of range: {0}")]
    OutOfRange(String),
    #[error("word is not a prenecklace for the selected order")]
    NotPrenecklace,
    #[error("word is an inverse Lyndon word")]
    InverseLyndonWord,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
