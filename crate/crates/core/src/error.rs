use thiserror::Error;

use crate::ring::Ring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),

    #[error("cannot mix {0:?} and {1:?} scalars")]
    MixedRings(Ring, Ring),

    #[error("zero vector does not determine a ray")]
    ZeroVector,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("unknown vertex symbol `{0}`")]
    UnknownSymbol(String),

    #[error("hyperedge {edge} repeats vertex `{symbol}`")]
    RepeatedVertex { edge: usize, symbol: String },

    #[error("hyperedge {edge} duplicates hyperedge {first}")]
    DuplicateEdge { edge: usize, first: usize },

    #[error("hyperedge {edge} has {size} vertices; at least 2 are required")]
    EdgeTooSmall { edge: usize, size: usize },

    #[error("missing `.` terminator")]
    MissingTerminator,

    #[error("{k} vertices exceed the {alphabet}-symbol MMP alphabet")]
    AlphabetExceeded { k: usize, alphabet: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("duplicate coordinatization entry for `{0}`")]
    DuplicateSymbol(String),

    #[error("vertex `{symbol}` has {found} components, expected {expected}")]
    ComponentCount {
        symbol: String,
        expected: usize,
        found: usize,
    },

    #[error("vertex `{0}` has no coordinates")]
    MissingCoordinates(String),

    #[error("hyperedge {0} is not mutually orthogonal")]
    InconsistentEdge(usize),

    #[error("vectors are not mutually orthogonal and independent")]
    NotOrthogonal,

    #[error("hyperedge index {index} out of range for {len} hyperedges")]
    EdgeIndex { index: usize, len: usize },

    #[error("operation leaves an empty hypergraph")]
    EmptyResult,

    #[error("hypergraph is not contextual")]
    NotContextual,

    #[error("exhaustive enumeration limited to {limit} vertices, got {k}")]
    TooLarge { k: usize, limit: usize },

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("{count} candidate vectors exceed the enumeration guard of {limit}")]
    EnumerationLimit { count: u128, limit: u128 },

    #[error("component set must contain 0 and a nonzero element")]
    BadComponents,

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),
}
