use std::io;

/// Errors reported by the library.
///
/// Everything except [`Error::Internal`] describes a problem with the
/// caller's input. `Internal` marks a broken invariant and should never be
/// observed.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("bad function table: {0}")]
    Table(String),

    #[error("value {value} at argument {arg} exceeds the magnitude bound 2^31")]
    Magnitude { arg: u32, value: i128 },

    #[error("function table has {len} values but n = {n}")]
    LengthMismatch { len: u32, n: u32 },

    #[error("{0}")]
    BadArgument(String),

    #[error("n = {n} exceeds the oracle limit {limit}; raise the limit to enumerate anyway")]
    OracleLimit { n: u32, limit: u32 },

    #[error("integer overflow while {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
