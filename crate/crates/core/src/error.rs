use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {msg}")]
pub struct ParseError {
    pub msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("no leading term: polynomial is zero")]
    NoLeadingTerm,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("monomial ideal is not squarefree: {0}")]
    NotSquarefree(String),
    #[error("simplicial complex is not pure")]
    NotPure,
    #[error("non-unimodular facet {facet:?} (determinant {det})")]
    NonUnimodular { facet: Vec<String>, det: String },
    #[error("degenerate Hamiltonian or chart: system is not zero-dimensional")]
    Degenerate,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
