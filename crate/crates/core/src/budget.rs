//! Node budgets for the exponential searches.

use crate::error::{Error, Result};

/// Default node limit for a single top-level search.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

/// Environment variable that overrides [`DEFAULT_NODE_LIMIT`].
pub const BUDGET_ENV: &str = "ODDCORE_BUDGET";

/// Default limit, honouring `ODDCORE_BUDGET` when it holds a positive integer.
pub fn default_limit() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_NODE_LIMIT)
}

/// Shared counter of explored search nodes.
///
/// One counter is threaded through every sub-search of an operation so that
/// aggregated searches (family freeness, core certification) respect a single
/// limit.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    /// Charge one node.
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(default_limit())
    }
}
