//! Letter addresses and cuts.
//!
//! The letters of `Pol(T)` are in one-to-one correspondence with the nodes of
//! `T` (left-right-root order). The cut of `T` at a leaf `α` is the term whose
//! Polish word is the prefix of `Pol(T)` ending at `α`'s letter, padded with
//! the unique number of operators that makes it well formed.

use crate::address::Address;
use crate::error::{Error, Result};
use crate::parse::{polish, Letter, PolishWord};
use crate::term::{Op, Term, View};

/// Addresses of all nodes in left-right-root order; entry `p - 1` is the
/// address of the `p`-th Polish letter.
pub fn letter_addresses(t: &Term) -> Vec<Address> {
    let mut out = Vec::with_capacity(2 * t.size() - 1);
    fn go(t: &Term, here: &mut Vec<bool>, out: &mut Vec<Address>) {
        if let View::App(_, l, r) = t.view() {
            here.push(false);
            go(l, here, out);
            here.pop();
            here.push(true);
            go(r, here, out);
            here.pop();
        }
        out.push(Address::from_bits(here.iter().copied()));
    }
    go(t, &mut Vec::new(), &mut out);
    out
}

/// Address of the node matching the `p`-th letter of `Pol(T)` (1-based).
pub fn addr_of_letter(p: usize, t: &Term) -> Result<Address> {
    let len = 2 * t.size() - 1;
    if p == 0 || p > len {
        return Err(Error::IndexOutOfRange { index: p, len });
    }
    Ok(letter_addresses(t).swap_remove(p - 1))
}

/// 1-based index of the Polish letter at `addr`.
pub fn letter_of_addr(t: &Term, addr: &Address) -> Result<usize> {
    letter_addresses(t)
        .iter()
        .position(|a| a == addr)
        .map(|i| i + 1)
        .ok_or_else(|| Error::AddressOutOfSkeleton(addr.clone()))
}

/// Completes a prefix of a Polish word with trailing `◁` letters.
fn pad_prefix(prefix: &[Letter]) -> PolishWord {
    let vars = prefix.iter().filter(|l| l.is_var()).count();
    let ops = prefix.len() - vars;
    let mut letters = prefix.to_vec();
    letters.extend(std::iter::repeat_n(Letter::Op(Op::Fwd), vars - ops - 1));
    PolishWord(letters)
}

/// Number of operators needed to complete the prefix ending at leaf `alpha`.
pub fn cut_defect(t: &Term, alpha: &Address) -> Result<usize> {
    if !t.subterm(alpha)?.is_var() {
        return Err(Error::NotALeaf(alpha.clone()));
    }
    let p = letter_of_addr(t, alpha)?;
    let word = polish(t);
    let vars = word.0[..p].iter().filter(|l| l.is_var()).count();
    Ok(vars - (p - vars) - 1)
}

/// `cut(T, α)` computed from the Polish prefix.
pub fn cut(t: &Term, alpha: &Address) -> Result<Term> {
    if !t.subterm(alpha)?.is_var() {
        return Err(Error::NotALeaf(alpha.clone()));
    }
    let p = letter_of_addr(t, alpha)?;
    let word = polish(t);
    pad_prefix(&word.0[..p]).to_term()
}

/// `cut(T, α)` computed from subterms: `T/α_0 ◁ (T/α_1 ◁ ( ... ◁ T/α))`
/// where `α_k` is the prefix of `α` before its `(k+1)`-st `1`, followed by `0`.
pub fn cut_by_subterms(t: &Term, alpha: &Address) -> Result<Term> {
    let leaf = t.subterm(alpha)?;
    if !leaf.is_var() {
        return Err(Error::NotALeaf(alpha.clone()));
    }
    let bits = alpha.bits();
    let mut pieces = Vec::new();
    for (j, &b) in bits.iter().enumerate() {
        if b {
            let a = Address::from_bits(bits[..j].iter().copied().chain(Some(false)));
            pieces.push(t.subterm(&a)?.clone());
        }
    }
    let mut acc = leaf.clone();
    for piece in pieces.into_iter().rev() {
        acc = Term::op(piece, acc);
    }
    Ok(acc)
}
