use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    /// A parameter failed its range check at construction.
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// The identity word has no first/last block and therefore no shape.
    #[error("empty word has no shape")]
    EmptyWord,

    /// A linear-domain quantity left the finite range; use the log-domain path.
    #[error("numeric overflow in {context}; use the log-domain path")]
    Overflow { context: &'static str },

    /// A brute-force routine was asked for more work than the oracle scale allows.
    #[error("word too large for the brute-force oracle ({steps} matrix factors, limit {limit})")]
    OracleScale { steps: u64, limit: u64 },

    /// lambda^(-(1-delta)/epsilon) >= 1, so the geometric tail diverges and the
    /// only valid upper bound on the resonant set is the full circle.
    #[error("parameters give trivial bound 2*pi: lambda^(-(1-delta)/epsilon) >= 1")]
    TrivialBound,

    /// A word specification string failed to parse.
    #[error("invalid word spec at byte {pos}: {msg}")]
    WordParse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
