//! Exact combinatorial search kernels.

mod coloring;
mod independent;

pub use coloring::{
    brooks_coloring, greedy_coloring, is_k_colorable, is_k_colorable_with_budget, is_k_edge_colorable,
    is_k_edge_colorable_with_budget, Coloring, EdgeColoring,
};
pub use independent::{
    independent_set_at_least, independent_set_at_least_with_budget, max_independent_set,
    max_independent_set_in_clique_partition, max_independent_set_with_budget,
};

use crate::error::{Error, Result};

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

/// Node counter shared by one search call. Running out turns the call into
/// [`Error::BudgetExhausted`]; it is never reported as a negative answer.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    node_limit: u64,
    nodes: u64,
    exhausted: bool,
}

impl SearchBudget {
    pub fn new(node_limit: u64) -> Self {
        Self { node_limit, nodes: 0, exhausted: false }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.exhausted = true;
            return Err(Error::BudgetExhausted(self.node_limit));
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn node_limit(&self) -> u64 {
        self.node_limit
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_LIMIT)
    }
}
