use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol code {code} at index {index} is outside the alphabet [0, {sigma})")]
    SymbolOutOfRange { index: usize, code: u32, sigma: u32 },

    #[error("invalid window parameters w={w}, k={k} (need w >= 2, k >= 1)")]
    InvalidWindow { w: usize, k: usize },

    #[error("ordering covers {ordering} symbols but the string alphabet has {string}")]
    AlphabetMismatch { string: u32, ordering: u32 },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("string of length {n} is shorter than k={k}")]
    StringTooShort { n: usize, k: usize },

    #[error("exhaustive search over {size}! permutations exceeds the budget of {max}!")]
    BudgetExceeded { size: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not Eulerian: in-degree {in_degree} != out-degree {out_degree} at vertex {vertex}")]
    DegreeMismatch {
        vertex: u32,
        in_degree: usize,
        out_degree: usize,
    },

    #[error("graph is not Eulerian: vertex {vertex} is not weakly connected to vertex {root}")]
    Disconnected { vertex: u32, root: u32 },

    #[error("counting identity violated: {0}")]
    IdentityViolation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
