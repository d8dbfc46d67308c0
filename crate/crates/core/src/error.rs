use thiserror::Error;

/// Errors raised by the testing pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite entry at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("matrix has no variables")]
    NoVariables,

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("column {0} has zero variance")]
    DegenerateColumn(usize),

    #[error("column {0} is constant after truncation")]
    AllTruncated(usize),

    #[error("column {column}: bootstrap resample stayed constant after {attempts} draws")]
    DegenerateResample { column: usize, attempts: usize },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty lambda grid")]
    EmptyGrid,

    #[error("no lambda in the grid yields non-degenerate truncated columns")]
    NoFeasibleLambda,

    #[error("target {target} lies below the tail at the validity edge t = {edge}")]
    NotBracketed { target: f64, edge: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for failures caused by the numbers themselves (degenerate
    /// columns, truncation, non-convergence) rather than malformed input.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::DegenerateColumn(_)
                | Error::AllTruncated(_)
                | Error::DegenerateResample { .. }
                | Error::NoFeasibleLambda
                | Error::NotBracketed { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
