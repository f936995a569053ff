use thiserror::Error;

/// Problems with Gauss codes and chord diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("label `{label}` occurs {count} time(s); every label must occur exactly twice")]
    NotDoubleOccurrence { label: String, count: usize },
    #[error("unknown chord `{0}`")]
    UnknownChord(String),
    #[error("chord index {index} out of range for {n} chord(s)")]
    ChordOutOfRange { index: usize, n: usize },
    #[error("{n} chords exceed the supported maximum of {max}")]
    TooManyChords { n: usize, max: usize },
    #[error("record declares n = {declared} but its word has {actual} chords")]
    CountMismatch { declared: usize, actual: usize },
    #[error("chord `{0}` crosses no other chord (strict mode rejects isolated chords)")]
    IsolatedChord(String),
}

/// Problems with square Z2 matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("entry ({row}, {col}) is {value}; entries must be 0 or 1")]
    NotBinary { row: usize, col: usize, value: i64 },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("diagonal entry ({0}, {0}) is nonzero")]
    NonzeroDiagonal(usize),
    #[error("row index {index} out of range for a {size}x{size} matrix")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("scalar product needs at least one row")]
    EmptyIndexSet,
    #[error("size {size} exceeds the supported maximum of {max}")]
    TooLarge { size: usize, max: usize },
    #[error("declared size {declared} does not match {actual} rows")]
    SizeMismatch { declared: usize, actual: usize },
}

/// Problems with permutations and inversion sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("{0:?} is not a permutation of 1..n")]
    NotPermutation(Vec<usize>),
    #[error("pair ({0}, {1}) is not of the form 1 <= i < j <= n")]
    MalformedPair(usize, usize),
    #[error("the pair set is not the inversion set of any permutation")]
    InvalidInversionSet,
}

/// A size cap on an exhaustive search was exceeded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what} = {value} exceeds the configured maximum {max} (raise it with GMK_MAX_N)")]
pub struct LimitExceeded {
    pub what: &'static str,
    pub value: usize,
    pub max: usize,
}

/// Reasons a row cannot be Δ-filled at the current step.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaFillError {
    #[error("row {0} is outside 1..={1}")]
    OutOfRange(usize, usize),
    #[error("row {0} has already been chosen")]
    AlreadyChosen(usize),
    #[error("row {index} has the wrong parity: {}", parity_rule(.previous))]
    ParityViolation {
        index: usize,
        previous: Option<usize>,
    },
}

fn parity_rule(previous: &Option<usize>) -> String {
    match previous {
        Some(p) => format!("the previous choice {p} has the same parity"),
        None => "the first choice must be odd".to_string(),
    }
}

/// Problems in the meander layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeanderError {
    #[error("N = {0} is invalid; N must be even and at least 2")]
    InvalidN(usize),
    #[error(transparent)]
    Limit(#[from] LimitExceeded),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("forced prefix rejected: {0}")]
    InvalidPrefix(#[from] DeltaFillError),
    #[error("not a meander matrix: {0}")]
    NotMeanderMatrix(String),
    #[error("reconstruction is inconsistent: {0}")]
    ReconstructionInconsistent(String),
    #[error("{0} residual unknowns is too many to expand")]
    TooManyUnknowns(usize),
}
