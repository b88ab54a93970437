use thiserror::Error;

use crate::syntax::Fragment;

/// Syntax error in a formula, annotated with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub(crate) fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("model line {line}: {msg}")]
    Model { line: usize, msg: String },

    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),

    #[error("unknown world `{0}`")]
    UnknownWorld(String),

    #[error("expected a formula of fragment {expected}, found {found}")]
    WrongFragment { expected: Fragment, found: Fragment },

    #[error("formula mixes intuitionistic disjunction and dependence atoms")]
    MixedFragment,

    #[error("dependence atom member is not a modal logic formula: {0}")]
    InvalidDependenceMember(String),

    #[error("{what} exceeds the limit of {limit} (got {actual})")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("models have different proposition signatures")]
    SignatureMismatch,

    #[error("{0}")]
    Invalid(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
