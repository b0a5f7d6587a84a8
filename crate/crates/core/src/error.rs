use std::fmt;

use thiserror::Error;

/// Which resource budget was exhausted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    Matchings,
    Cycles,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BudgetKind::Matchings => f.write_str("max_matchings"),
            BudgetKind::Cycles => f.write_str("max_cycles"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has no perfect matching")]
    NoPerfectMatching,

    #[error("edge set is not a perfect matching of the graph")]
    NotPerfectMatching,

    #[error("graph has {count} perfect matchings, expected exactly one")]
    NotUniquePerfectMatching { count: u64 },

    #[error("{budget} budget of {limit} exceeded ({reached} found before stopping)")]
    BudgetExceeded {
        budget: BudgetKind,
        limit: usize,
        reached: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph has a pendant vertex {0}")]
    PendantVertex(usize),

    #[error("graph is not matching covered")]
    NotMatchingCovered,

    #[error("invalid shore: {0}")]
    InvalidShore(String),

    #[error("{what} supports at most {max} vertices, graph has {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("edge set is not a global forcing set")]
    NotGlobalForcingSet,

    #[error("invalid hitting-set instance: {0}")]
    InvalidInstance(String),

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("malformed input at byte {offset}: {message}")]
    Malformed { offset: usize, message: String },

    #[error("edge vector has {got} entries, graph has {expected} edges")]
    VectorLength { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
