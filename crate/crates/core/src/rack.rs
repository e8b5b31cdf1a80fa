//! Free racks and free quandles.
//!
//! The free rack on `X` is realised by half-conjugacy on pairs `(x, a)` with
//! `x ∈ X` and `a` in the free group on `X`; the free quandle by conjugation
//! `a ◁ b = b⁻¹ a b` in that group. Both word problems reduce to comparing
//! freely reduced words.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::term::{Op, Term, View};

/// An element `(x, a)` of the half-conjugacy rack.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RackElement {
    pub base: u32,
    pub tail: FreeWord,
}

impl RackElement {
    pub fn generator(g: u32) -> RackElement {
        RackElement {
            base: g,
            tail: FreeWord::identity(),
        }
    }
}

impl fmt::Display for RackElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x{}, {})", self.base, self.tail)
    }
}

/// An element of the conjugacy quandle of the free group, kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuandleElement(pub FreeWord);

impl QuandleElement {
    pub fn generator(g: u32) -> QuandleElement {
        QuandleElement(FreeWord::generator(g))
    }
}

impl fmt::Display for QuandleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(x, a) ◁ (y, b) = (x, a b⁻¹ y b)` and `(x, a) ◁̄ (y, b) = (x, a b⁻¹ y⁻¹ b)`.
pub fn rack_op(a: &RackElement, b: &RackElement, op: Op) -> RackElement {
    let y = match op {
        Op::Fwd => b.base as i32,
        Op::Bwd => -(b.base as i32),
    };
    let mut tail = a.tail.mul(&b.tail.inverse());
    tail.push(y);
    RackElement {
        base: a.base,
        tail: tail.mul(&b.tail),
    }
}

/// `a ◁ b = b⁻¹ a b` and `a ◁̄ b = b a b⁻¹`.
pub fn quandle_op(a: &QuandleElement, b: &QuandleElement, op: Op) -> QuandleElement {
    match op {
        Op::Fwd => QuandleElement(a.0.conjugate_by(&b.0)),
        Op::Bwd => QuandleElement(a.0.conjugate_by(&b.0.inverse())),
    }
}

fn eval_with<E>(t: &Term, leaf: &impl Fn(u32) -> E, op: &impl Fn(&E, &E, Op) -> E) -> E {
    match t.view() {
        View::Var(v) => leaf(v),
        View::App(o, l, r) => op(&eval_with(l, leaf, op), &eval_with(r, leaf, op), o),
    }
}

pub fn eval_rack(t: &Term) -> RackElement {
    eval_with(t, &RackElement::generator, &rack_op)
}

pub fn eval_quandle(t: &Term) -> QuandleElement {
    eval_with(t, &QuandleElement::generator, &quandle_op)
}

/// Decides equivalence under the rack laws.
pub fn wp_rack(t: &Term, u: &Term) -> bool {
    eval_rack(t) == eval_rack(u)
}

/// Decides equivalence under the quandle laws.
pub fn wp_quandle(t: &Term, u: &Term) -> bool {
    eval_quandle(t) == eval_quandle(u)
}

/// The left comb `(..((x ◁^{e1} x1) ◁^{e2} x2) ..) ◁^{en} xn` read off a word.
fn comb(base: u32, word: &[i32]) -> Term {
    word.iter().fold(Term::var(base), |acc, &l| {
        let op = if l > 0 { Op::Fwd } else { Op::Bwd };
        Term::app(op, acc, Term::var(l.unsigned_abs()))
    })
}

/// The letters `(x_i, e_i)` of a left comb, or `None` if `t` is not one.
pub fn comb_letters(t: &Term) -> Option<(u32, Vec<i32>)> {
    match t.view() {
        View::Var(v) => Some((v, Vec::new())),
        View::App(op, l, r) => {
            let y = r.as_var()? as i32;
            let (base, mut word) = comb_letters(l)?;
            word.push(if op == Op::Fwd { y } else { -y });
            Some((base, word))
        }
    }
}

/// Whether `t` is a left comb whose consecutive letters never cancel.
pub fn is_rack_normal(t: &Term) -> bool {
    comb_letters(t).is_some_and(|(_, w)| FreeWord(w).is_reduced())
}

/// Whether `t` is rack normal and its first letter is not its base.
pub fn is_quandle_normal(t: &Term) -> bool {
    comb_letters(t).is_some_and(|(base, w)| {
        FreeWord(w.clone()).is_reduced() && w.first().is_none_or(|l| l.unsigned_abs() != base)
    })
}

/// The unique rack-normal term equivalent to `t`.
pub fn rack_normal_term(t: &Term) -> Term {
    let e = eval_rack(t);
    comb(e.base, e.tail.letters())
}

/// Splits a reduced conjugate `c⁻¹ x c` into `x` and `c`.
fn split_conjugate(w: &FreeWord) -> (u32, &[i32]) {
    let letters = w.letters();
    debug_assert!(letters.len() % 2 == 1);
    let m = letters.len() / 2;
    (letters[m].unsigned_abs(), &letters[m + 1..])
}

/// The unique quandle-normal term equivalent to `t`.
pub fn quandle_normal_term(t: &Term) -> Term {
    let e = eval_quandle(t);
    let (base, c) = split_conjugate(&e.0);
    comb(base, c)
}

/// Equivalence under left selfdistributivity plus idempotency for terms in
/// one variable: every such term collapses to the variable.
pub fn wp_spindle_one_var(t: &Term, u: &Term) -> Result<bool> {
    if !t.is_fwd_only() || !u.is_fwd_only() {
        return Err(Error::BwdNotSupported);
    }
    let mut vars = t.variables();
    vars.extend(u.variables());
    vars.sort_unstable();
    vars.dedup();
    if vars.len() > 1 {
        return Err(Error::MultiVariable);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_infix;
    use crate::term::all_terms_up_to;

    fn t(s: &str) -> Term {
        parse_infix(s).unwrap()
    }
    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn half_conjugacy_examples() {
        let x = RackElement::generator(1);
        let xx = rack_op(&x, &x, Op::Fwd);
        assert_eq!(xx.tail, w("x1"));
        // Left powers grow the tail; right powers stop at `(x, x)`.
        assert_eq!(eval_rack(&Term::right_power(5).unwrap()).tail, w("x1"));
        for n in 1..=6 {
            let p = Term::left_power(n).unwrap();
            let e = eval_rack(&p);
            assert_eq!(e.base, 1);
            assert_eq!(e.tail, FreeWord(vec![1; n - 1]), "n = {n}");
        }
        assert_eq!(eval_rack(&t("(x1*x2)*x3")).tail, w("x2 x3"));
        assert_eq!(eval_rack(&t("(x1*x2)/x2")), x);
    }

    #[test]
    fn conjugacy_examples() {
        assert_eq!(eval_quandle(&t("x1*x2")).0, w("x2^-1 x1 x2"));
        assert_eq!(eval_quandle(&t("x*x")), QuandleElement::generator(1));
        assert_eq!(eval_quandle(&t("(x1*x2)/x2")), QuandleElement::generator(1));
    }

    #[test]
    fn word_problems() {
        assert!(wp_rack(&t("(x1*x2)/x2"), &t("x1")));
        assert!(wp_quandle(&t("x1*x1"), &t("x1")));
        assert!(!wp_rack(&t("x1*x1"), &t("x1")));
        assert!(!wp_rack(&t("x1*x2"), &t("x2*x1")));
        assert!(!wp_quandle(&t("x1*x2"), &t("x2*x1")));
    }

    #[test]
    fn normal_terms() {
        assert_eq!(rack_normal_term(&t("(x1*x2)/x2")), t("x1"));
        assert_eq!(rack_normal_term(&t("x1*(x2*x3)")), t("((x1/x3)*x2)*x3"));
        assert_eq!(quandle_normal_term(&t("(x1*x1)*x2")), t("x1*x2"));
        assert!(!is_quandle_normal(&t("(x1*x1)*x2")));
        assert!(is_rack_normal(&t("(x1*x1)*x2")));
    }

    #[test]
    fn normal_terms_are_sound_and_injective() {
        let terms: Vec<Term> = all_terms_up_to(4)
            .into_iter()
            .flat_map(|s| {
                let bwd = flip_ops(&s);
                [s, bwd]
            })
            .flat_map(|s| {
                [
                    s.map_vars(&|_| Term::var(1)),
                    s.map_vars(&|v| Term::var(v.min(2))),
                ]
            })
            .collect();
        for s in &terms {
            let n = rack_normal_term(s);
            assert!(is_rack_normal(&n), "{s}");
            assert!(wp_rack(s, &n), "{s}");
            let q = quandle_normal_term(s);
            assert!(is_quandle_normal(&q), "{s}");
            assert!(wp_quandle(s, &q), "{s}");
        }
        let mut seen = std::collections::HashMap::new();
        for s in &terms {
            let n = rack_normal_term(s);
            if is_rack_normal(s) {
                if let Some(prev) = seen.insert(eval_rack(s), s.clone()) {
                    assert_eq!(prev, *s, "two normal terms share an evaluation");
                }
                assert_eq!(n, *s);
            }
        }
    }

    fn flip_ops(t: &Term) -> Term {
        match t.view() {
            View::Var(v) => Term::var(v),
            View::App(op, l, r) => {
                let o = if op == Op::Fwd { Op::Bwd } else { Op::Fwd };
                Term::app(o, flip_ops(l), flip_ops(r))
            }
        }
    }

    #[test]
    fn spindle_one_variable() {
        assert_eq!(wp_spindle_one_var(&t("x"), &t("(x*x)*x")), Ok(true));
        assert_eq!(wp_spindle_one_var(&t("x"), &t("x")), Ok(true));
        assert_eq!(
            wp_spindle_one_var(&t("x1"), &t("x1*x2")),
            Err(Error::MultiVariable)
        );
    }
}
