use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("partitions of different sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{what} {value} exceeds the supported bound {max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid context: {0}")]
    Context(String),

    #[error("{partition} is not a valid orbit for {context}")]
    InvalidOrbit { partition: String, context: String },

    #[error("{partition} is not in the {family} family of {context}")]
    NotInFamily {
        partition: String,
        family: String,
        context: String,
    },

    #[error("{0} is not below {1} in dominance order")]
    NotBelow(String, String),

    #[error("pair ({above}, {below}) matches no known local pattern (reduced to {local})")]
    Unclassified {
        above: String,
        below: String,
        local: String,
    },

    #[error("{0}")]
    Unsupported(String),
}
