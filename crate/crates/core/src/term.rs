//! Terms over the shelf operations `◁` (written `*`) and `◁̄` (written `/`).
//!
//! A [`Term`] is an immutable binary tree. Subterms are reference counted, so
//! operations that duplicate subterms (the derived term, LD-expansions) share
//! structure instead of copying it. Each node caches its size and a structural
//! hash; equality is structural with a pointer fast path.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::address::Address;
use crate::error::{Error, Result};

/// The two operation symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// `◁`, the selfdistributive operation.
    Fwd,
    /// `◁̄`, the inverse operation of a rack.
    Bwd,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Fwd => '*',
            Op::Bwd => '/',
        }
    }
}

#[derive(Debug)]
enum Node {
    Var(u32),
    App {
        op: Op,
        left: Term,
        right: Term,
        size: usize,
        hash: u64,
    },
}

#[derive(Clone)]
pub struct Term(Arc<Node>);

/// The two immediate pieces of a compound term.
pub enum View<'a> {
    Var(u32),
    App(Op, &'a Term, &'a Term),
}

fn var_hash(v: u32) -> u64 {
    let mut h = DefaultHasher::new();
    0u8.hash(&mut h);
    v.hash(&mut h);
    h.finish()
}

impl Term {
    /// The variable `x_i`, `i ≥ 1`.
    pub fn var(index: u32) -> Term {
        assert!(index >= 1, "variable indices start at 1");
        Term(Arc::new(Node::Var(index)))
    }

    /// The one-variable generator `x = x1`.
    pub fn x() -> Term {
        Term::var(1)
    }

    pub fn app(op: Op, left: Term, right: Term) -> Term {
        let mut h = DefaultHasher::new();
        1u8.hash(&mut h);
        op.hash(&mut h);
        left.structural_hash().hash(&mut h);
        right.structural_hash().hash(&mut h);
        let size = left.size() + right.size();
        Term(Arc::new(Node::App {
            op,
            left,
            right,
            size,
            hash: h.finish(),
        }))
    }

    /// `left ◁ right`.
    pub fn op(left: Term, right: Term) -> Term {
        Term::app(Op::Fwd, left, right)
    }

    /// `left ◁̄ right`.
    pub fn bop(left: Term, right: Term) -> Term {
        Term::app(Op::Bwd, left, right)
    }

    pub fn view(&self) -> View<'_> {
        match &*self.0 {
            Node::Var(v) => View::Var(*v),
            Node::App {
                op, left, right, ..
            } => View::App(*op, left, right),
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(&*self.0, Node::Var(_))
    }

    pub fn as_var(&self) -> Option<u32> {
        match &*self.0 {
            Node::Var(v) => Some(*v),
            _ => None,
        }
    }

    pub fn left(&self) -> Option<&Term> {
        match &*self.0 {
            Node::App { left, .. } => Some(left),
            Node::Var(_) => None,
        }
    }

    pub fn right(&self) -> Option<&Term> {
        match &*self.0 {
            Node::App { right, .. } => Some(right),
            Node::Var(_) => None,
        }
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match &*self.0 {
            Node::Var(_) => 1,
            Node::App { size, .. } => *size,
        }
    }

    pub fn structural_hash(&self) -> u64 {
        match &*self.0 {
            Node::Var(v) => var_hash(*v),
            Node::App { hash, .. } => *hash,
        }
    }

    pub fn ptr_eq(&self, other: &Term) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Length of the leftmost branch (number of `0` steps to the leftmost leaf).
    pub fn left_height(&self) -> usize {
        let mut t = self;
        let mut h = 0;
        while let Some(l) = t.left() {
            t = l;
            h += 1;
        }
        h
    }

    /// Length of the rightmost branch.
    pub fn right_height(&self) -> usize {
        let mut t = self;
        let mut h = 0;
        while let Some(r) = t.right() {
            t = r;
            h += 1;
        }
        h
    }

    pub fn depth(&self) -> usize {
        match self.view() {
            View::Var(_) => 0,
            View::App(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// True when every internal node is `◁`.
    pub fn is_fwd_only(&self) -> bool {
        match self.view() {
            View::Var(_) => true,
            View::App(op, l, r) => op == Op::Fwd && l.is_fwd_only() && r.is_fwd_only(),
        }
    }

    pub fn max_var(&self) -> u32 {
        match self.view() {
            View::Var(v) => v,
            View::App(_, l, r) => l.max_var().max(r.max_var()),
        }
    }

    /// Sorted list of the variables occurring in the term.
    pub fn variables(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.for_each_leaf(&mut |v| out.push(v));
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_one_var(&self) -> bool {
        self.variables().len() == 1
    }

    /// Rightmost variable.
    pub fn last_var(&self) -> u32 {
        let mut t = self;
        while let Some(r) = t.right() {
            t = r;
        }
        t.as_var().expect("rightmost node is a leaf")
    }

    fn for_each_leaf(&self, f: &mut impl FnMut(u32)) {
        match self.view() {
            View::Var(v) => f(v),
            View::App(_, l, r) => {
                l.for_each_leaf(f);
                r.for_each_leaf(f);
            }
        }
    }

    /// Leaf variables in left-to-right order.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        self.for_each_leaf(&mut |v| out.push(v));
        out
    }

    /// The subterm below `addr`.
    pub fn subterm(&self, addr: &Address) -> Result<&Term> {
        let mut t = self;
        for bit in addr.iter() {
            t = match (t.left(), t.right()) {
                (Some(l), Some(r)) => {
                    if bit {
                        r
                    } else {
                        l
                    }
                }
                _ => return Err(Error::AddressOutOfSkeleton(addr.clone())),
            };
        }
        Ok(t)
    }

    /// Replaces the subterm at `addr` by `f(subterm)`, rebuilding the spine.
    pub fn replace_at(
        &self,
        addr: &Address,
        f: impl FnOnce(&Term) -> Result<Term>,
    ) -> Result<Term> {
        fn go(
            t: &Term,
            bits: &[bool],
            addr: &Address,
            f: impl FnOnce(&Term) -> Result<Term>,
        ) -> Result<Term> {
            match bits.split_first() {
                None => f(t),
                Some((&bit, rest)) => match t.view() {
                    View::Var(_) => Err(Error::AddressOutOfSkeleton(addr.clone())),
                    View::App(op, l, r) => {
                        if bit {
                            Ok(Term::app(op, l.clone(), go(r, rest, addr, f)?))
                        } else {
                            Ok(Term::app(op, go(l, rest, addr, f)?, r.clone()))
                        }
                    }
                },
            }
        }
        go(self, addr.bits(), addr, f)
    }

    /// All addresses of the term, in prefix order.
    pub fn skeleton(&self) -> Vec<Address> {
        let mut out = Vec::new();
        let mut stack = vec![(self, Address::root())];
        while let Some((t, a)) = stack.pop() {
            if let View::App(_, l, r) = t.view() {
                stack.push((r, a.child(true)));
                stack.push((l, a.child(false)));
            }
            out.push(a);
        }
        out
    }

    /// Leaf addresses, left to right.
    pub fn leaf_addresses(&self) -> Vec<Address> {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = vec![(self, Address::root())];
        while let Some((t, a)) = stack.pop() {
            match t.view() {
                View::Var(_) => out.push(a),
                View::App(_, l, r) => {
                    stack.push((r, a.child(true)));
                    stack.push((l, a.child(false)));
                }
            }
        }
        out
    }

    /// Iterated left subterm `LS^r(T)`; `None` when the term is too shallow.
    pub fn left_subterm_iter(&self, r: usize) -> Option<&Term> {
        let mut t = self;
        for _ in 0..r {
            t = t.left()?;
        }
        Some(t)
    }

    /// True iff `self = LS^r(other)` for some `r ≥ 1`.
    pub fn iter_left_divides(&self, other: &Term) -> bool {
        if self.size() >= other.size() {
            return false;
        }
        let mut t = other;
        while let Some(l) = t.left() {
            if l.size() < self.size() {
                return false;
            }
            if l == self {
                return true;
            }
            t = l;
        }
        false
    }

    /// Relabels every leaf with `x1`, keeping the shape and operations.
    pub fn project_one_var(&self) -> Term {
        match self.view() {
            View::Var(1) => self.clone(),
            View::Var(_) => Term::x(),
            View::App(op, l, r) => Term::app(op, l.project_one_var(), r.project_one_var()),
        }
    }

    /// Applies `f` to every leaf.
    pub fn map_vars(&self, f: &impl Fn(u32) -> Term) -> Term {
        match self.view() {
            View::Var(v) => f(v),
            View::App(op, l, r) => Term::app(op, l.map_vars(f), r.map_vars(f)),
        }
    }

    /// `x^[n]`: `x^[1] = x`, `x^[n+1] = x ◁ x^[n]`.
    pub fn right_power(n: usize) -> Result<Term> {
        if n < 1 {
            return Err(Error::InvalidPower(n));
        }
        let mut t = Term::x();
        for _ in 1..n {
            t = Term::op(Term::x(), t);
        }
        Ok(t)
    }

    /// `x_[n]`: `x_[1] = x`, `x_[n+1] = x_[n] ◁ x`.
    pub fn left_power(n: usize) -> Result<Term> {
        if n < 1 {
            return Err(Error::InvalidPower(n));
        }
        let mut t = Term::x();
        for _ in 1..n {
            t = Term::op(t, Term::x());
        }
        Ok(t)
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        if self.ptr_eq(other) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (Node::Var(a), Node::Var(b)) => a == b,
            (
                Node::App {
                    op: o1,
                    left: l1,
                    right: r1,
                    size: s1,
                    hash: h1,
                },
                Node::App {
                    op: o2,
                    left: l2,
                    right: r2,
                    size: s2,
                    hash: h2,
                },
            ) => h1 == h2 && s1 == s2 && o1 == o2 && l1 == l2 && r1 == r2,
            _ => false,
        }
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.structural_hash());
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &Term, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
            match t.view() {
                View::Var(v) => write!(f, "x{v}"),
                View::App(op, l, r) => {
                    if !top {
                        f.write_str("(")?;
                    }
                    go(l, f, false)?;
                    write!(f, "{}", op.symbol())?;
                    go(r, f, false)?;
                    if !top {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, true)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

/// All one-variable `◁`-terms with exactly `size` leaves.
pub fn all_terms_of_size(size: usize) -> Vec<Term> {
    let mut table: Vec<Vec<Term>> = vec![Vec::new(), vec![Term::x()]];
    for n in 2..=size {
        let mut row = Vec::new();
        for k in 1..n {
            for l in &table[k] {
                for r in &table[n - k] {
                    row.push(Term::op(l.clone(), r.clone()));
                }
            }
        }
        table.push(row);
    }
    if size == 0 {
        Vec::new()
    } else {
        table.swap_remove(size)
    }
}

/// All one-variable `◁`-terms with at most `max_size` leaves, by increasing size.
pub fn all_terms_up_to(max_size: usize) -> Vec<Term> {
    (1..=max_size).flat_map(all_terms_of_size).collect()
}
