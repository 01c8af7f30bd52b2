use thiserror::Error;

/// Errors shared by the parsers, recognizers and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("input has {n} vertices, exceeding the limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    /// Recognition failure; `class` names the class that was attempted.
    #[error("graph was not recognized as a {class} graph")]
    NotInClass { class: &'static str },

    /// The block graph consists of a single block (a complete graph); the
    /// cut-tree decomposition does not apply and the caller must handle it.
    #[error("block graph has a single block")]
    SingleBlock,

    #[error("invalid input: {0}")]
    Invalid(String),
}
