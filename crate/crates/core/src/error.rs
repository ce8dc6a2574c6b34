use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty graph: at least one vertex is required")]
    EmptyGraph,

    #[error("graph has {n} vertices, above the size cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is disconnected (infinite diameter)")]
    Disconnected,

    #[error("graph is not regular")]
    NotRegular,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("p not prime: {0}")]
    NotPrime(usize),

    #[error("A not symmetric: {0}")]
    NotSymmetric(String),

    #[error("0 is not a member of A")]
    MissingZero,

    #[error("empty residue set")]
    EmptySet,

    #[error("n*d must be even (n = {n}, d = {d})")]
    OddDegreeSum { n: usize, d: usize },

    #[error("canonical deduplication is capped at n <= {cap} (got n = {n})")]
    DedupCap { n: usize, cap: usize },

    #[error("rejection cap of {0} attempts exceeded")]
    RejectionCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
