//! The Polish algorithm: look at the first clash between the Polish words
//! of two terms and, when a variable faces an operator, expand the term
//! holding the variable so that the operator appears there too.

use std::fmt;

use serde::Serialize;

use crate::address::Address;
use crate::cut::addr_of_letter;
use crate::error::{Error, Result};
use crate::ld::expand_seq;
use crate::parse::{polish, Letter, PolishWord};
use crate::term::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    First,
    Second,
}

impl Side {
    /// `1` for the first term, `2` for the second.
    pub fn index(self) -> u8 {
        match self {
            Side::First => 1,
            Side::Second => 2,
        }
    }
}

/// `(p, i)`: the Polish words share exactly `p` initial letters and the
/// next letter is a variable in term `i` and an operator in the other one.
pub fn disc(t: &Term, u: &Term) -> Option<(usize, Side)> {
    disc_words(&polish(t), &polish(u))
}

fn disc_words(w: &PolishWord, v: &PolishWord) -> Option<(usize, Side)> {
    let p = w.common_prefix(v);
    match (w.0.get(p)?, v.0.get(p)?) {
        (Letter::Var(_), Letter::Op(_)) => Some((p, Side::First)),
        (Letter::Op(_), Letter::Var(_)) => Some((p, Side::Second)),
        _ => None,
    }
}

/// The solution at `α = β 1 0^p 1^r` (`p ≥ 1`): `(β, β0, ..., β0^{p-1})`.
pub fn sol(alpha: &Address) -> Result<Vec<Address>> {
    let bits = alpha.bits();
    let mut end = bits.len();
    while end > 0 && bits[end - 1] {
        end -= 1;
    }
    let zeros_end = end;
    while end > 0 && !bits[end - 1] {
        end -= 1;
    }
    let p = zeros_end - end;
    if p == 0 || end == 0 {
        return Err(Error::NoFactor10(alpha.clone()));
    }
    let beta = Address::from_bits(bits[..end - 1].iter().copied());
    Ok((0..p).map(|k| beta.concat(&Address::zeros(k))).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PolishVerdict {
    Equivalent,
    NotEquivalent,
    CapExceeded,
}

/// Why the loop stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PolishExit {
    Equal,
    /// One Polish word is a proper prefix of the other.
    Prefix,
    /// First clash between two distinct variables.
    VariableClash,
    Cap,
}

/// One iteration: the snapshot before the step and the expansion applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolishStep {
    pub clash: usize,
    pub side: Side,
    pub address: String,
    pub expansion: Vec<String>,
    pub before: (String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolishOutcome {
    pub verdict: PolishVerdict,
    pub exit: PolishExit,
    pub steps: usize,
    /// All expansion addresses applied to each side, in order.
    pub left_expansions: Vec<Address>,
    pub right_expansions: Vec<Address>,
    pub final_terms: (Term, Term),
    pub trace: Vec<PolishStep>,
}

impl PolishOutcome {
    /// The final Polish pair with `||` at the longest common prefix.
    pub fn final_snapshot(&self) -> (String, String) {
        snapshot(&polish(&self.final_terms.0), &polish(&self.final_terms.1))
    }
}

fn render(letters: &[Letter], one_var: bool) -> String {
    let mut s = String::new();
    for l in letters {
        match l {
            Letter::Var(_) if one_var => s.push('x'),
            other => s.push_str(&other.to_string()),
        }
    }
    s
}

/// Both words rendered compactly with `||` after the common prefix.
pub fn snapshot(w: &PolishWord, v: &PolishWord) -> (String, String) {
    let one_var =
        w.0.iter()
            .chain(&v.0)
            .all(|l| matches!(l, Letter::Var(1) | Letter::Op(_)));
    let p = w.common_prefix(v);
    let mark = |x: &PolishWord| {
        format!(
            "{}||{}",
            render(&x.0[..p], one_var),
            render(&x.0[p..], one_var)
        )
    };
    (mark(w), mark(v))
}

impl fmt::Display for PolishStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "  {}", self.before.0)?;
        writeln!(f, "  {}", self.before.1)?;
        write!(
            f,
            "DISC = ({}, {}), address {}, SOL = ({})",
            self.clash,
            self.side.index(),
            self.address,
            self.expansion.join(", ")
        )
    }
}

/// Runs the Polish algorithm for at most `cap` steps.
pub fn wp_polish(t: &Term, u: &Term, cap: usize, record_trace: bool) -> Result<PolishOutcome> {
    if !t.is_fwd_only() || !u.is_fwd_only() {
        return Err(Error::BwdNotSupported);
    }
    let (mut a, mut b) = (t.clone(), u.clone());
    let (mut wa, mut wb) = (polish(&a), polish(&b));
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut trace = Vec::new();
    let mut steps = 0;
    while let Some((p, side)) = disc_words(&wa, &wb) {
        if steps == cap {
            return Ok(PolishOutcome {
                verdict: PolishVerdict::CapExceeded,
                exit: PolishExit::Cap,
                steps,
                left_expansions: left,
                right_expansions: right,
                final_terms: (a, b),
                trace,
            });
        }
        let (target, seq_out) = match side {
            Side::First => (&mut a, &mut left),
            Side::Second => (&mut b, &mut right),
        };
        let alpha = addr_of_letter(p, target)?;
        let s = sol(&alpha).map_err(|_| Error::InternalSolUndefined(alpha.clone()))?;
        if record_trace {
            trace.push(PolishStep {
                clash: p,
                side,
                address: alpha.to_string(),
                expansion: s.iter().map(|x| x.to_string()).collect(),
                before: snapshot(&wa, &wb),
            });
        }
        *target = expand_seq(target, &s)?;
        seq_out.extend(s);
        steps += 1;
        let (na, nb) = (polish(&a), polish(&b));
        debug_assert!(na.common_prefix(&nb) > p, "common prefix must grow");
        wa = na;
        wb = nb;
    }
    let p = wa.common_prefix(&wb);
    let (verdict, exit) = if wa == wb {
        (PolishVerdict::Equivalent, PolishExit::Equal)
    } else if p == wa.len() || p == wb.len() {
        (PolishVerdict::NotEquivalent, PolishExit::Prefix)
    } else {
        (PolishVerdict::NotEquivalent, PolishExit::VariableClash)
    };
    Ok(PolishOutcome {
        verdict,
        exit,
        steps,
        left_expansions: left,
        right_expansions: right,
        final_terms: (a, b),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_infix;

    fn t(s: &str) -> Term {
        parse_infix(s).unwrap()
    }
    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn sol_examples() {
        assert_eq!(sol(&a("100")).unwrap(), vec![a("e"), a("0")]);
        assert_eq!(sol(&a("110")).unwrap(), vec![a("1")]);
        assert_eq!(sol(&a("10")).unwrap(), vec![a("e")]);
        assert_eq!(sol(&a("0100111")).unwrap(), vec![a("0"), a("00")]);
        for bad in ["e", "0", "1", "011", "000"] {
            assert!(matches!(sol(&a(bad)), Err(Error::NoFactor10(_))), "{bad}");
        }
    }

    #[test]
    fn disc_examples() {
        let t0 = t("(x1*x2)*(x1*(x3*x4))");
        let u0 = t("x1*((x2*x3)*(x2*x4))");
        assert_eq!(disc(&t0, &u0), Some((2, Side::Second)));
        assert_eq!(disc(&t0, &t0), None);
        assert_eq!(disc(&t("x1*x2"), &t("x1*x3")), None);
    }

    #[test]
    fn worked_example_converges_in_four_steps() {
        let t0 = t("(x1*x2)*(x1*(x3*x4))");
        let u0 = t("x1*((x2*x3)*(x2*x4))");
        let out = wp_polish(&t0, &u0, 100_000, true).unwrap();
        assert_eq!(out.verdict, PolishVerdict::Equivalent);
        assert_eq!(out.steps, 4);
        let clashes: Vec<(usize, u8)> = out
            .trace
            .iter()
            .map(|s| (s.clash, s.side.index()))
            .collect();
        assert_eq!(clashes, [(2, 2), (5, 1), (6, 1), (9, 2)]);
        let addrs: Vec<&str> = out.trace.iter().map(|s| s.address.as_str()).collect();
        assert_eq!(addrs, ["100", "110", "10", "110"]);
        assert_eq!(out.trace[0].before.0, "x1x2||.x1x3x4...");
        assert_eq!(out.trace[0].before.1, "x1x2||x3.x2x4...");
        assert_eq!(out.trace[1].before.0, "x1x2.x1x3||x4...");
        assert_eq!(
            expand_seq(&t0, &out.left_expansions).unwrap(),
            expand_seq(&u0, &out.right_expansions).unwrap()
        );
        assert_eq!(
            polish(&out.final_terms.0).to_string(),
            "x1 x2 . x1 x3 . . x1 x2 . x1 x4 . . ."
        );
    }

    #[test]
    fn negative_exits() {
        let out = wp_polish(&t("x"), &t("x*x"), 10, false).unwrap();
        assert_eq!(out.verdict, PolishVerdict::NotEquivalent);
        assert_eq!(out.exit, PolishExit::Prefix);
        let out = wp_polish(&t("x1*x1"), &t("x1*x2"), 10, false).unwrap();
        assert_eq!(out.verdict, PolishVerdict::NotEquivalent);
        assert_eq!(out.exit, PolishExit::VariableClash);
        assert_eq!(
            wp_polish(&t("x/x"), &t("x"), 10, false),
            Err(Error::BwdNotSupported)
        );
    }

    #[test]
    fn cap_is_reported() {
        let t0 = t("(x1*x2)*(x1*(x3*x4))");
        let u0 = t("x1*((x2*x3)*(x2*x4))");
        let out = wp_polish(&t0, &u0, 2, false).unwrap();
        assert_eq!(out.verdict, PolishVerdict::CapExceeded);
        assert_eq!(out.steps, 2);
    }
}
