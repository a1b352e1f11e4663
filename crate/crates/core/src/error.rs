use thiserror::Error;

use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("word {0:?} is not an associative Lyndon-Shirshov word")]
    NotAlsw(Word),
    #[error("word {0:?} is too short for this operation")]
    TooShort(Word),
    #[error("word {0:?} starts with its minimal letter and cannot be eliminated")]
    NotWeakAlsw(Word),
    #[error("letter rank {rank} is outside an alphabet of {size} letters")]
    LetterOutOfRange { rank: u32, size: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("context does not match: {0}")]
    InvalidOccurrence(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not a Lie polynomial")]
    NotLie,
    #[error("degree bound {bound} is below relation degree {degree}")]
    DegreeBoundTooSmall { bound: usize, degree: usize },
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
