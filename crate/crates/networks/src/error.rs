use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("unsupported network size {n} (supported: {min}..={max})")]
    UnsupportedSize { n: usize, min: usize, max: usize },

    #[error("{n} channels is too many for exhaustive zero-one verification (limit {limit})")]
    TooLargeForExhaustive { n: usize, limit: usize },

    #[error("invalid comparator ({low}, {high}) for {n} channels")]
    InvalidComparator { low: usize, high: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("network on {n} channels is not a Bose-Nelson network")]
    NotBoseNelson { n: usize },
}
