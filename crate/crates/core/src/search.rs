//! Budgets, cancellation and breadth-first expansion frontiers shared by the
//! searching solvers.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::address::Address;
use crate::error::{Error, Result};
use crate::ld::one_step_expansions;
use crate::term::Term;

/// A cooperative cancellation flag, cheap to clone and share across threads.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> CancelToken {
        CancelToken::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Debug)]
pub struct SearchLimits {
    /// Maximum number of distinct terms kept across all frontiers.
    pub max_terms: usize,
    pub cancel: Option<CancelToken>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_terms: 2_000_000,
            cancel: None,
        }
    }
}

impl SearchLimits {
    pub fn with_max_terms(max_terms: usize) -> SearchLimits {
        SearchLimits {
            max_terms,
            cancel: None,
        }
    }

    pub fn with_cancel(mut self, token: CancelToken) -> SearchLimits {
        self.cancel = Some(token);
        self
    }

    /// Fails when `used` exceeds the budget or the search was cancelled.
    pub fn check(&self, used: usize) -> Result<()> {
        if self.cancel.as_ref().is_some_and(|c| c.is_cancelled()) {
            return Err(Error::Cancelled);
        }
        if used > self.max_terms {
            return Err(Error::BudgetExceeded);
        }
        Ok(())
    }
}

struct Seen {
    depth: usize,
    parent: Option<(Term, Address)>,
}

/// The terms reachable from a root by expansions, grouped by the length of
/// their shortest expansion sequence. Within a level terms are ordered by
/// parent order, then by lexicographic expansion address.
pub struct Frontier {
    levels: Vec<Vec<Term>>,
    seen: HashMap<Term, Seen>,
}

impl Frontier {
    pub fn new(root: Term) -> Frontier {
        let mut seen = HashMap::new();
        seen.insert(
            root.clone(),
            Seen {
                depth: 0,
                parent: None,
            },
        );
        Frontier {
            levels: vec![vec![root]],
            seen,
        }
    }

    /// Number of levels built so far.
    pub fn levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, d: usize) -> &[Term] {
        self.levels.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Total number of distinct terms discovered.
    pub fn len(&self) -> usize {
        self.seen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seen.is_empty()
    }

    /// True when the last built level is empty, so no deeper term exists.
    pub fn exhausted(&self) -> bool {
        self.levels.last().is_some_and(|l| l.is_empty())
    }

    pub fn depth_of(&self, t: &Term) -> Option<usize> {
        self.seen.get(t).map(|s| s.depth)
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.seen.contains_key(t)
    }

    /// Builds levels until level `d` exists or the frontier is exhausted.
    pub fn ensure_level(&mut self, d: usize, limits: &SearchLimits) -> Result<()> {
        while self.levels.len() <= d && !self.exhausted() {
            self.grow(limits)?;
        }
        Ok(())
    }

    fn grow(&mut self, limits: &SearchLimits) -> Result<()> {
        let depth = self.levels.len();
        let mut next = Vec::new();
        for cur in self.levels.last().expect("at least one level") {
            for (addr, child) in one_step_expansions(cur) {
                if self.seen.contains_key(&child) {
                    continue;
                }
                self.seen.insert(
                    child.clone(),
                    Seen {
                        depth,
                        parent: Some((cur.clone(), addr)),
                    },
                );
                next.push(child);
            }
            limits.check(self.seen.len())?;
        }
        self.levels.push(next);
        Ok(())
    }

    /// The recorded witness sequence from the root to `t`.
    pub fn path_to(&self, t: &Term) -> Vec<Address> {
        let mut path = Vec::new();
        let mut node = t.clone();
        while let Some(Seen {
            parent: Some((p, a)),
            ..
        }) = self.seen.get(&node)
        {
            path.push(a.clone());
            node = p.clone();
        }
        path.reverse();
        path
    }
}
