//! Syntactic solution by dovetailed expansion.
//!
//! Both terms are expanded breadth first. Pairs `(T1, T1')` of expansions
//! are visited by increasing total number of steps. Equality proves
//! equivalence. Equal projections on differing terms, or a projection that
//! is a proper iterated left subterm of the other, prove inequivalence.

use std::collections::HashMap;

use serde::Serialize;

use crate::address::Address;
use crate::error::{Error, Result};
use crate::search::{Frontier, SearchLimits};
use crate::term::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SyntacticReason {
    /// A common expansion was found.
    CommonExpansion,
    /// Projections coincide but the terms differ.
    SameProjection,
    /// The first projection is a proper iterated left subterm of the second.
    LeftDividesRight,
    /// The second projection is a proper iterated left subterm of the first.
    RightDividesLeft,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntacticOutcome {
    pub equivalent: bool,
    pub reason: SyntacticReason,
    /// Expansion sequences reaching the certifying pair.
    pub left: Vec<Address>,
    pub right: Vec<Address>,
    /// Total number of steps `|s| + |s'|` of the certifying pair.
    pub stage: usize,
}

/// Projections of all discovered terms, keyed by projection.
#[derive(Default)]
struct ProjIndex(HashMap<Term, Vec<(usize, Term)>>);

impl ProjIndex {
    fn add(&mut self, depth: usize, t: &Term) {
        self.0
            .entry(t.project_one_var())
            .or_default()
            .push((depth, t.clone()));
    }

    fn at_depth<'a>(&'a self, proj: &Term, depth: usize) -> impl Iterator<Item = &'a Term> + 'a {
        self.0
            .get(proj)
            .into_iter()
            .flatten()
            .filter(move |(d, _)| *d == depth)
            .map(|(_, t)| t)
    }
}

/// The proper iterated left subterms `LS^r(t)`, `r ≥ 1`.
fn proper_left_subterms(t: &Term) -> impl Iterator<Item = &Term> {
    std::iter::successors(t.left(), |s| s.left())
}

/// Decides `T ≡LD T'` for terms over any variables. Fails with
/// `BudgetExceeded` or `Cancelled` when the limits are hit first.
pub fn wp_ld_syntactic(t: &Term, u: &Term, limits: &SearchLimits) -> Result<SyntacticOutcome> {
    if !t.is_fwd_only() || !u.is_fwd_only() {
        return Err(Error::BwdNotSupported);
    }
    let mut a = Frontier::new(t.clone());
    let mut b = Frontier::new(u.clone());
    let mut ia = ProjIndex::default();
    let mut ib = ProjIndex::default();
    ia.add(0, t);
    ib.add(0, u);
    let mut indexed = (1usize, 1usize);

    for stage in 0.. {
        limits.check(a.len() + b.len())?;
        a.ensure_level(stage, limits)?;
        b.ensure_level(stage, limits)?;
        for d in indexed.0..a.levels() {
            for x in a.level(d) {
                ia.add(d, x);
            }
        }
        for d in indexed.1..b.levels() {
            for x in b.level(d) {
                ib.add(d, x);
            }
        }
        indexed = (a.levels(), b.levels());

        let found = |x: &Term, y: &Term, reason, equivalent| SyntacticOutcome {
            equivalent,
            reason,
            left: a.path_to(x),
            right: b.path_to(y),
            stage,
        };
        for da in 0..=stage {
            let db = stage - da;
            for x in a.level(da) {
                if b.depth_of(x) == Some(db) {
                    return Ok(found(x, x, SyntacticReason::CommonExpansion, true));
                }
            }
        }
        for da in 0..=stage {
            let db = stage - da;
            for x in a.level(da) {
                if limits.cancel.as_ref().is_some_and(|c| c.is_cancelled()) {
                    return Err(Error::Cancelled);
                }
                let px = x.project_one_var();
                if let Some(y) = ib.at_depth(&px, db).find(|y| *y != x) {
                    return Ok(found(x, y, SyntacticReason::SameProjection, false));
                }
                for ls in proper_left_subterms(&px) {
                    if let Some(y) = ib.at_depth(ls, db).next() {
                        return Ok(found(x, y, SyntacticReason::RightDividesLeft, false));
                    }
                }
            }
            for y in b.level(db) {
                let py = y.project_one_var();
                for ls in proper_left_subterms(&py) {
                    if let Some(x) = ia.at_depth(ls, da).next() {
                        return Ok(found(x, y, SyntacticReason::LeftDividesRight, false));
                    }
                }
            }
        }
        if a.exhausted() && b.exhausted() && stage >= a.levels() + b.levels() {
            // Both expansion sets are finite and no certificate exists;
            // by the comparison property this cannot happen.
            return Err(Error::BudgetExceeded);
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ld::expand_seq;
    use crate::parse::parse_infix;

    fn t(s: &str) -> Term {
        parse_infix(s).unwrap()
    }

    fn run(x: &str, y: &str) -> SyntacticOutcome {
        wp_ld_syntactic(&t(x), &t(y), &SearchLimits::default()).unwrap()
    }

    #[test]
    fn worked_example_is_equivalent() {
        let (x, y) = ("(x*x)*(x*(x*x))", "x*((x*x)*(x*x))");
        let out = run(x, y);
        assert!(out.equivalent);
        assert_eq!(
            expand_seq(&t(x), &out.left).unwrap(),
            expand_seq(&t(y), &out.right).unwrap()
        );
        assert!(out.stage <= 5);
    }

    #[test]
    fn negative_examples() {
        let out = run("x1", "x2");
        assert!(!out.equivalent);
        assert_eq!(out.reason, SyntacticReason::SameProjection);
        let out = run("x*x", "x*(x*x)");
        assert!(!out.equivalent);
        let out = run("x", "x*x");
        assert_eq!(out.reason, SyntacticReason::LeftDividesRight);
        assert_eq!(out.stage, 0);
    }

    #[test]
    fn multi_variable_example() {
        let out = run("(x1*x2)*(x1*(x3*x4))", "x1*((x2*x3)*(x2*x4))");
        assert!(out.equivalent);
        let out = run("x1*(x2*x3)", "x1*(x3*x2)");
        assert!(!out.equivalent);
    }

    #[test]
    fn budget() {
        let r = wp_ld_syntactic(
            &t("x*(x*(x*(x*x)))"),
            &t("((x*x)*x)*(x*x)"),
            &SearchLimits::with_max_terms(3),
        );
        assert_eq!(r, Err(Error::BudgetExceeded));
    }
}
