use thiserror::Error;

/// Errors produced by the counting, enumeration, polynomial and series routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A request was refused because it exceeds a configured resource limit.
    #[error("refused: {requested} exceeds {limit} = {allowed}")]
    ResourceLimit {
        limit: &'static str,
        requested: String,
        allowed: u64,
    },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("{family} has no closed form at q = {q}")]
    OutsideValidityRange { family: &'static str, q: u64 },

    #[error("interpolation produced a non-integral or negative coefficient at m^{power}: {value}")]
    Integrality { power: usize, value: String },

    #[error("interpolation needs {needed} points, table provides {available}")]
    InsufficientPoints { needed: usize, available: usize },

    #[error("table does not cover {what}")]
    Coverage { what: String },

    #[error("cannot divide: dividend valuation {dividend} is below divisor valuation {divisor}")]
    Valuation { dividend: usize, divisor: usize },

    #[error("square root needs constant term 1")]
    SqrtPrecondition,

    #[error("inverse binomial transform is negative at ({n}, {m}): {value}")]
    NegativeTransform { n: usize, m: usize, value: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
