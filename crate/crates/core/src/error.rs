use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("empty graph")]
    EmptyGraph,

    #[error("no {k}-regular graph on {n} vertices")]
    NoSuchRegularGraph { n: usize, k: usize },

    #[error("pairing model exceeded {0} rejections")]
    RetryBudget(usize),

    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed certificate: {0}")]
    Malformed(String),

    #[error("search budget exhausted after {0} nodes")]
    BudgetExhausted(u64),

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    OverCap { n: usize, cap: usize },

    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

impl Error {
    /// True for errors that leave a question open rather than answer it.
    pub fn is_undecided(&self) -> bool {
        matches!(self, Error::BudgetExhausted(_) | Error::OverCap { .. })
    }
}
