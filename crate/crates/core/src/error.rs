use thiserror::Error;

/// Errors raised by graph operations, code checks, solvers and builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set over {found} vertices used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("a vertex pair needs two distinct vertices, got ({0}, {0})")]
    InvalidPair(usize),

    #[error("radius must be at least 1")]
    ZeroRadius,

    #[error("{what} is limited to n <= {cap}, got n = {n}")]
    TooLarge { what: &'static str, n: usize, cap: usize },

    /// The graph (or the relevant power of it) has a pair of twins, so no
    /// separating set or identifying code exists.
    #[error("vertices {x} and {y} are twins (radius {radius}); no code exists")]
    Twins { x: usize, y: usize, radius: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid family spec `{spec}`: {reason}")]
    InvalidFamily { spec: String, reason: String },

    #[error("edge list, line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A guarantee that should hold for every input failed. Always a bug.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// Input that is well-formed but outside an operation's domain.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Twins { .. } | Error::Disconnected | Error::Precondition(_) | Error::TooLarge { .. }
        )
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
