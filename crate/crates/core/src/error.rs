use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("element {element} out of range for universe of size {size}")]
    OutOfRange { element: usize, size: usize },

    #[error("tuple length {got} does not match arity {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("duplicate free variable `{0}`")]
    DuplicateVariable(String),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("`{0}` requires a grid structure")]
    RequiresGrid(String),

    #[error("initiation undefined: permutation is not systemic")]
    NotSystemic,

    #[error("grid too small: {required} levels per vertical required, height is {height}")]
    GridTooSmall { required: usize, height: usize },

    #[error("no boundary up to cap {cap}")]
    ExceedsCap { cap: usize },

    #[error("{0}")]
    Input(String),
}
