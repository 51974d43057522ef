use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} = {value} is above the limit {limit}")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("letter {letter} is outside the alphabet [1, {alphabet}]")]
    LetterOutOfAlphabet { letter: usize, alphabet: usize },

    #[error("word range error: {0}")]
    Range(&'static str),

    #[error("index {index} is out of range [1, {total}]")]
    IndexOutOfRange { index: String, total: String },

    #[error("word is not a member of the family")]
    NotAMember,

    #[error("invalid prefix: {0}")]
    InvalidPrefix(&'static str),

    #[error("boards are not disjoint: they share a row or a column")]
    NotDisjoint,

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("the family is empty")]
    EmptyFamily,

    #[error("insufficient data: need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
