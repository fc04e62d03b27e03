use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),

    #[error("symbol index {index} out of range for alphabet of size {size}")]
    SymbolOutOfRange { index: usize, size: usize },

    #[error("alphabets differ")]
    AlphabetMismatch,

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("invalid grammar: {0}")]
    InvalidGrammar(String),

    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length is not a perfect square: {0}")]
    NotPerfectSquare(usize),

    #[error("index sequence is not strictly increasing at position {0}")]
    NotIncreasing(usize),

    #[error("index sequence ends at {last} before covering a word of length {len}")]
    SequenceTooShort { last: usize, len: usize },

    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    #[error("budget exceeded: {needed} candidates requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid diagonal pattern: {0}")]
    InvalidPattern(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
