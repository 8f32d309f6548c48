use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol has weight {symbol} but the class has weight {class}")]
    WeightMismatch { symbol: i64, class: i64 },

    #[error("beta sequence of length {len} cannot hold a partition with {parts} parts")]
    BetaTooShort { len: usize, parts: usize },

    #[error("beta sequence {0:?} is not canonical (strictly increasing, non-negative)")]
    NotCanonical(Vec<i64>),

    #[error("{what}: n = {n} exceeds the configured bound {max}")]
    BoundExceeded { what: &'static str, n: u64, max: u64 },

    #[error("rows of the bi-symbol describe the same partition; the restriction to D_n splits")]
    RowsEqual,

    #[error("class {0} is not in D_n (odd number of negative cycles)")]
    NotInDn(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("q = {0} is not an odd prime supported by the SO_5 routines")]
    UnsupportedField(u32),

    #[error("inconsistent class-C data for element: {0}")]
    InconsistentClassC(String),
}

pub type Result<T> = std::result::Result<T, Error>;
