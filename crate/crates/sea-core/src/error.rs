//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, SeaError>;

/// Everything that can go wrong across the pipeline.
#[derive(Debug, Error)]
pub enum SeaError {
    /// Two operands (or an operand and a config) disagree on shape.
    #[error("shape mismatch in {op}: {left} vs {right}")]
    Shape {
        op: &'static str,
        left: String,
        right: String,
    },

    /// An index (class label, token id, column) fell outside its domain.
    #[error("index out of range in {what}: {index} not in [0, {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    /// A value violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Corpus-level operations need at least one token.
    #[error("empty corpus: {0}")]
    EmptyCorpus(String),

    /// Sequence-level operations need at least one token.
    #[error("empty sequence: {0}")]
    EmptySequence(String),

    /// A computation produced or received a non-finite value.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Input data could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The data has too little rank for the requested decomposition.
    #[error("degenerate rank: {0}")]
    DegenerateRank(String),

    /// No class had both positives and negatives; the metric is undefined.
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// Loaded artifacts (checkpoint, embedding) disagree on dimensions.
    #[error("incompatible artifacts: {0}")]
    Incompatible(String),

    /// An I/O failure, annotated with the byte offset reached.
    #[error("read error at byte offset {offset}: {source}")]
    Read {
        offset: u64,
        #[source]
        source: std::io::Error,
    },

    /// A plain I/O failure (writes, directory listing).
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl SeaError {
    pub(crate) fn shape(op: &'static str, left: impl ToString, right: impl ToString) -> Self {
        SeaError::Shape {
            op,
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub(crate) fn io(path: impl ToString, source: std::io::Error) -> Self {
        SeaError::Io {
            path: path.to_string(),
            source,
        }
    }
}
