use thiserror::Error;

/// Everything that can go wrong when building or combining the objects of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("relations {first} and {second} are the same up to orientation")]
    DuplicateRelation { first: usize, second: usize },

    #[error("relation {0} has identical sides")]
    TrivialRelation(usize),

    #[error("relation {0} has an empty side")]
    EmptySide(usize),

    #[error("word must be nonempty")]
    EmptyWord,

    #[error("move {index} does not apply: {msg}")]
    BadMove { index: usize, msg: String },

    #[error("cannot compose: bottom `{bot}` differs from top `{top}`")]
    ComposeMismatch { bot: String, top: String },

    #[error("diagram is not spherical over `{0}`")]
    NotSpherical(String),

    #[error("hyperplane identity is not exact for `{0}`")]
    InexactIdentity(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
