use thiserror::Error;

/// Errors from the sorters themselves.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SortError {
    #[error("unsupported size {n} for network sorters (supported: 2..=16)")]
    UnsupportedSize { n: usize },

    #[error("slice of length {len} is shorter than the requested {n} items")]
    SliceTooShort { len: usize, n: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown sorter `{0}`")]
    UnknownSorter(String),
}
