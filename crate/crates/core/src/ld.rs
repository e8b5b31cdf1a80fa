//! The LD rewriting calculus.
//!
//! `LD_α` rewrites the subterm at `α` from `T1 ◁ (T2 ◁ T3)` to
//! `(T1 ◁ T2) ◁ (T1 ◁ T3)` (expand) or back (contract). Words in these
//! partial operators act on the right, letter by letter.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::address::Address;
use crate::error::{Error, Result};
use crate::search::{Frontier, SearchLimits};
use crate::term::{Op, Term, View};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Expand,
    Contract,
}

impl Direction {
    pub fn inverse(self) -> Direction {
        match self {
            Direction::Expand => Direction::Contract,
            Direction::Contract => Direction::Expand,
        }
    }
}

fn fwd_parts(t: &Term) -> Option<(&Term, &Term)> {
    match t.view() {
        View::App(Op::Fwd, l, r) => Some((l, r)),
        _ => None,
    }
}

/// Rewrites the root of `t` once in the given direction.
pub fn ld_at_root(t: &Term, direction: Direction) -> Option<Term> {
    match direction {
        Direction::Expand => {
            let (t1, rest) = fwd_parts(t)?;
            let (t2, t3) = fwd_parts(rest)?;
            Some(Term::op(
                Term::op(t1.clone(), t2.clone()),
                Term::op(t1.clone(), t3.clone()),
            ))
        }
        Direction::Contract => {
            let (a, b) = fwd_parts(t)?;
            let (t1, t2) = fwd_parts(a)?;
            let (t1b, t3) = fwd_parts(b)?;
            if t1 != t1b {
                return None;
            }
            Some(Term::op(t1.clone(), Term::op(t2.clone(), t3.clone())))
        }
    }
}

/// `T • LD_α` (expand) or `T • LD_α⁻¹` (contract).
pub fn apply_ld(t: &Term, alpha: &Address, direction: Direction) -> Result<Term> {
    let not_applicable = || Error::NotApplicable {
        address: alpha.clone(),
        direction,
        step: None,
    };
    t.replace_at(alpha, |sub| {
        ld_at_root(sub, direction).ok_or_else(not_applicable)
    })
    .map_err(|e| match e {
        Error::AddressOutOfSkeleton(_) => not_applicable(),
        e => e,
    })
}

/// Applies `LD_α` in the expanding direction for each `α` of `seq` in turn.
pub fn expand_seq(t: &Term, seq: &[Address]) -> Result<Term> {
    let mut cur = t.clone();
    for (i, alpha) in seq.iter().enumerate() {
        cur = apply_ld(&cur, alpha, Direction::Expand).map_err(|e| with_step(e, i + 1))?;
    }
    Ok(cur)
}

fn with_step(e: Error, i: usize) -> Error {
    match e {
        Error::NotApplicable {
            address, direction, ..
        } => Error::NotApplicable {
            address,
            direction,
            step: Some(i),
        },
        e => e,
    }
}

/// Addresses where an expansion applies, in lexicographic (preorder) order.
pub fn expansion_points(t: &Term) -> Vec<Address> {
    let mut out = Vec::new();
    fn go(t: &Term, here: &mut Vec<bool>, out: &mut Vec<Address>) {
        if let View::App(op, l, r) = t.view() {
            if op == Op::Fwd && fwd_parts(r).is_some() {
                out.push(Address::from_bits(here.iter().copied()));
            }
            here.push(false);
            go(l, here, out);
            here.pop();
            here.push(true);
            go(r, here, out);
            here.pop();
        }
    }
    go(t, &mut Vec::new(), &mut out);
    out
}

/// All terms obtained from `t` by one expansion step, with their addresses.
pub fn one_step_expansions(t: &Term) -> Vec<(Address, Term)> {
    expansion_points(t)
        .into_iter()
        .map(|a| {
            let next = apply_ld(t, &a, Direction::Expand).expect("point is expandable");
            (a, next)
        })
        .collect()
}

/// `S ⊗ T`: `S ⊗ x = S ◁ x`, `S ⊗ (T0 ◁ T1) = (S ⊗ T0) ◁ (S ⊗ T1)`.
pub fn otimes(s: &Term, t: &Term) -> Term {
    let mut memo = HashMap::new();
    otimes_memo(s, t, &mut memo)
}

fn otimes_memo(s: &Term, t: &Term, memo: &mut HashMap<Term, Term>) -> Term {
    if let Some(r) = memo.get(t) {
        return r.clone();
    }
    let r = match t.view() {
        View::Var(_) => Term::op(s.clone(), t.clone()),
        View::App(op, l, r) => Term::app(op, otimes_memo(s, l, memo), otimes_memo(s, r, memo)),
    };
    memo.insert(t.clone(), r.clone());
    r
}

/// The derived term: `∂x = x`, `∂(T0 ◁ T1) = ∂T0 ⊗ ∂T1`.
pub fn derive(t: &Term) -> Result<Term> {
    if !t.is_fwd_only() {
        return Err(Error::BwdNotSupported);
    }
    let mut memo = HashMap::new();
    Ok(derive_memo(t, &mut memo))
}

fn derive_memo(t: &Term, memo: &mut HashMap<Term, Term>) -> Term {
    if let Some(r) = memo.get(t) {
        return r.clone();
    }
    let r = match t.view() {
        View::Var(_) => t.clone(),
        View::App(_, l, r) => {
            let dl = derive_memo(l, memo);
            let dr = derive_memo(r, memo);
            otimes(&dl, &dr)
        }
    };
    memo.insert(t.clone(), r.clone());
    r
}

/// `∂^p T`.
pub fn derive_power(t: &Term, p: usize) -> Result<Term> {
    let mut cur = t.clone();
    for _ in 0..p {
        cur = derive(&cur)?;
    }
    Ok(cur)
}

/// One letter `LD_α^{±1}` of a word in the geometry monoid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LdLetter {
    pub address: Address,
    pub inverse: bool,
}

impl LdLetter {
    pub fn new(address: Address, inverse: bool) -> LdLetter {
        LdLetter { address, inverse }
    }

    pub fn direction(&self) -> Direction {
        if self.inverse {
            Direction::Contract
        } else {
            Direction::Expand
        }
    }
}

impl fmt::Display for LdLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LD_{}", self.address)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LdLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A word in the operators `LD_α` and their inverses.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LdWord(pub Vec<LdLetter>);

impl LdWord {
    pub fn empty() -> LdWord {
        LdWord(Vec::new())
    }

    pub fn letters(&self) -> &[LdLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Formal inverse: reversed, exponents flipped.
    pub fn inverse(&self) -> LdWord {
        LdWord(
            self.0
                .iter()
                .rev()
                .map(|l| LdLetter::new(l.address.clone(), !l.inverse))
                .collect(),
        )
    }

    /// Prefixes every address with `prefix` (`sh_1` for prefix `1`).
    pub fn shifted(&self, prefix: &Address) -> LdWord {
        LdWord(
            self.0
                .iter()
                .map(|l| LdLetter::new(l.address.prefixed(prefix), l.inverse))
                .collect(),
        )
    }

    pub fn concat(mut self, other: &LdWord) -> LdWord {
        self.0.extend_from_slice(&other.0);
        self
    }

    pub fn push(&mut self, letter: LdLetter) {
        self.0.push(letter);
    }
}

impl fmt::Display for LdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for LdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LdWord {
    type Err = Error;

    /// Parses `LD_e LD_11 LD_1^-1` (the `LD_` prefix is optional; `1` alone
    /// is the empty word only when it is the whole input).
    fn from_str(s: &str) -> Result<LdWord> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(LdWord::empty());
        }
        s.split_whitespace()
            .map(|tok| {
                let body = tok.strip_prefix("LD_").unwrap_or(tok);
                let (addr, inverse) = match body.strip_suffix("^-1") {
                    Some(a) => (a, true),
                    None => (body, false),
                };
                Ok(LdLetter::new(addr.parse()?, inverse))
            })
            .collect::<Result<Vec<_>>>()
            .map(LdWord)
    }
}

/// Applies the letters of `w` to `t`, left to right.
pub fn apply_generator_word(t: &Term, w: &LdWord) -> Result<Term> {
    let mut cur = t.clone();
    for (i, letter) in w.0.iter().enumerate() {
        cur =
            apply_ld(&cur, &letter.address, letter.direction()).map_err(|e| with_step(e, i + 1))?;
    }
    Ok(cur)
}

/// A pair of expansion sequences leading `T` and `T'` to the same term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonExpansion {
    pub left: Vec<Address>,
    pub right: Vec<Address>,
    pub term: Term,
}

/// Searches for `s, s'` with `expand_seq(T, s) = expand_seq(T', s')`,
/// visiting pairs by increasing `|s| + |s'|`.
pub fn common_expansion(t: &Term, u: &Term, limits: &SearchLimits) -> Result<CommonExpansion> {
    let mut a = Frontier::new(t.clone());
    let mut b = Frontier::new(u.clone());
    for total in 0.. {
        limits.check(a.len() + b.len())?;
        a.ensure_level(total, limits)?;
        b.ensure_level(total, limits)?;
        for da in 0..=total {
            let db = total - da;
            if da >= a.levels() || db >= b.levels() {
                continue;
            }
            for term in a.level(da) {
                if b.depth_of(term) == Some(db) {
                    return Ok(CommonExpansion {
                        left: a.path_to(term),
                        right: b.path_to(term),
                        term: term.clone(),
                    });
                }
            }
        }
        if a.exhausted() && b.exhausted() && total >= a.levels() + b.levels() {
            return Err(Error::BudgetExceeded);
        }
    }
    unreachable!()
}

/// Searches for expansion steps leading from `t` to exactly `target`.
/// Expansions never shrink a term, so terms larger than `target` are pruned.
pub fn find_expansion_path(
    t: &Term,
    target: &Term,
    limits: &SearchLimits,
) -> Result<Option<Vec<Address>>> {
    let mut seen: HashMap<Term, Option<(Term, Address)>> = HashMap::new();
    seen.insert(t.clone(), None);
    let mut level = vec![t.clone()];
    while !level.is_empty() {
        let mut next = Vec::new();
        for cur in &level {
            if cur == target {
                let mut path = Vec::new();
                let mut node = cur.clone();
                while let Some(Some((parent, addr))) = seen.get(&node).cloned() {
                    path.push(addr);
                    node = parent;
                }
                path.reverse();
                return Ok(Some(path));
            }
            for (addr, child) in one_step_expansions(cur) {
                if child.size() > target.size() || seen.contains_key(&child) {
                    continue;
                }
                seen.insert(child.clone(), Some((cur.clone(), addr)));
                next.push(child);
            }
            limits.check(seen.len())?;
        }
        level = next;
    }
    Ok(None)
}
