use crate::error::{Error, Result};
use std::cell::Cell;
use std::time::Instant;

/// Node/time budget threaded through exhaustive searches.
///
/// A fresh `SearchLimits::default()` imposes no bounds. Budgets are checked
/// cooperatively: solvers call [`SearchLimits::tick`] once per explored node
/// and bail out with [`Error::ResourceLimit`] when a bound is hit.
#[derive(Debug)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
    used: Cell<u64>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: None, deadline: None, used: Cell::new(0) }
    }
}

impl SearchLimits {
    pub fn new(max_nodes: Option<u64>, deadline: Option<Instant>) -> Self {
        SearchLimits { max_nodes, deadline, used: Cell::new(0) }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchLimits { max_nodes: Some(max_nodes), ..Default::default() }
    }

    pub fn with_deadline(deadline: Instant) -> Self {
        SearchLimits { deadline: Some(deadline), ..Default::default() }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn tick(&self) -> Result<()> {
        let n = self.used.get() + 1;
        self.used.set(n);
        if let Some(cap) = self.max_nodes {
            if n > cap {
                return Err(Error::resource(format!("node budget of {cap} exhausted")));
            }
        }
        if let Some(deadline) = self.deadline {
            // Clock checks are amortized; Instant::now is cheap but not free.
            if n % 1024 == 0 && Instant::now() > deadline {
                return Err(Error::resource("time budget exhausted".to_string()));
            }
        }
        Ok(())
    }
}
