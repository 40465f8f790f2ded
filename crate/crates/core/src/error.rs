use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error; the CLI
/// maps all of them to exit status 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word width {0} is outside 1..=64")]
    BadWidth(usize),
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("not a generator matrix: rank {rank} is less than {rows} rows")]
    NotGeneratorMatrix { rank: usize, rows: usize },
    #[error("not a subgroup of the XOR group: {0}")]
    NotSubgroup(String),
    #[error("not an index-2 subgroup of the vertex group")]
    NotIndexTwo,
    #[error("invalid pre-hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("not a hypergraph: {0}")]
    NotHypergraph(String),
    #[error("generator matrix is not in standard form (E_N | H); run standard_form first")]
    NotStandardForm,
    #[error("column {0} of H is zero and does not define a set")]
    ZeroColumn(usize),
    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        expected: String,
    },
    #[error("{what} = {value} exceeds the size guard {limit}; raise it with PP_MAX_DIM or --max-dim")]
    SizeGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("vertex set is not full-dimensional: affine dimension {found} in ambient dimension {ambient}")]
    NotFullDimensional { found: usize, ambient: usize },
    #[error("degenerate lift: the subgroup is the coordinate kernel U_{0}, so the lift is not full-dimensional")]
    DegenerateLift(usize),
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
