//! Library-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("dataset is empty")]
    EmptyDataset,

    #[error("instance {index} has no components")]
    EmptyVector { index: usize },

    #[error("instance {index} has {actual} components, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        actual: usize,
    },

    #[error("instance {index} component {component} is not finite")]
    NonFiniteCoordinate { index: usize, component: usize },

    #[error("{labels} labels supplied for {n} instances")]
    LabelCountMismatch { labels: usize, n: usize },

    #[error("instance {index} has zero norm; the cosine-angular metric is undefined for it")]
    ZeroNorm { index: usize },

    #[error(
        "metric `precomputed` takes a supplied matrix; it cannot be computed from coordinates"
    )]
    PrecomputedNeedsMatrix,

    #[error("dataset has no coordinates; only a precomputed matrix works with it")]
    NoCoordinates,

    #[error("distance matrix has {entries} entries, expected {expected} for {n} instances")]
    MatrixShape {
        entries: usize,
        expected: usize,
        n: usize,
    },

    #[error("distance matrix entry ({row}, {col}) = {value} must be finite and non-negative")]
    InvalidDistance { row: usize, col: usize, value: f64 },

    #[error("distance matrix diagonal entry ({index}, {index}) = {value}, expected 0")]
    NonZeroDiagonal { index: usize, value: f64 },

    #[error(
        "distance matrix is asymmetric at ({row}, {col}): {actual} does not match \
         the transposed entry {expected}"
    )]
    AsymmetricDistance {
        row: usize,
        col: usize,
        actual: f64,
        expected: f64,
    },

    #[error(
        "triangle inequality violated: d({i}, {k}) = {direct} exceeds \
         d({i}, {j}) + d({j}, {k}) = {via} by more than {tolerance}"
    )]
    TriangleViolation {
        i: usize,
        j: usize,
        k: usize,
        direct: f64,
        via: f64,
        tolerance: f64,
    },

    #[error("epsilon must be a positive finite number, got {0}")]
    InvalidEpsilon(f64),

    #[error("k must satisfy 1 <= k <= {n}, got {k}")]
    InvalidK { k: usize, n: usize },

    #[error("seed index {seed_index} is out of range for {n} instances")]
    InvalidSeedIndex { seed_index: usize, n: usize },

    #[error("beta must satisfy 1 <= beta <= {max}, got {beta}")]
    InvalidBeta { beta: usize, max: usize },

    #[error("set {set} member {member} is out of range for universe size {universe}")]
    SetMemberOutOfRange {
        set: usize,
        member: usize,
        universe: usize,
    },

    #[error("universe cannot be covered: element {element} appears in no set")]
    Uncoverable { element: usize },

    #[error("group member {member} is out of range for {n} instances")]
    MemberOutOfRange { member: usize, n: usize },

    #[error("dataset has {dataset} instances but the distance matrix has {matrix}")]
    SizeMismatch { dataset: usize, matrix: usize },

    #[error("exact search limit exceeded: {what} = {got}, limit {limit}")]
    ExactSearchLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    FileIo {
        path: String,
        source: std::io::Error,
    },

    #[error("solution document: {0}")]
    Document(String),

    #[error("unsupported schema version `{0}`, expected \"1\"")]
    SchemaVersion(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
