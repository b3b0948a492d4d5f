use thiserror::Error;

/// Errors produced by parsing, building, and solving.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("interpretations are defined over different universes")]
    UniverseMismatch,

    #[error("capacity exceeded: {what} needs {required}, limit is {limit}")]
    Capacity {
        what: String,
        required: String,
        limit: usize,
    },

    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("interpretation is not two-valued")]
    NotTwoValued,

    #[error("interpretation is not a model of the framework")]
    NotAModel,

    #[error("({from},{to}) is not a link of the framework")]
    NotALink { from: String, to: String },

    #[error("acceptance family is not downward-closed")]
    NotDownwardClosed,

    #[error("link ({from},{to}) is not attacking: C_{to}(R) = f but C_{to}(R + {from}) = t for R = {{{}}}", witness.join(","))]
    NotAttacking {
        from: String,
        to: String,
        witness: Vec<String>,
    },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn capacity(what: impl Into<String>, required: impl ToString, limit: usize) -> Error {
    Error::Capacity {
        what: what.into(),
        required: required.to_string(),
        limit,
    }
}
