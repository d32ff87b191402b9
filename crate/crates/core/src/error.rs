use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderOverflow { order: usize, max: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),

    /// f(n,G|F) needs K2 in F.
    #[error("f is undefined: family `{0}` does not contain K2")]
    FamilyLacksK2(String),

    /// g(n,G|F) needs K2 outside F.
    #[error("g is undefined: family `{0}` contains K2")]
    FamilyContainsK2(String),

    #[error("graph is not a forest")]
    NotAForest,

    #[error("coloring uses {have} colors, at least {need} required")]
    TooFewColors { have: usize, need: usize },

    #[error("search space too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
