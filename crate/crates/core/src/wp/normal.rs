//! Descents, cuts of `∂^p x^[n]`, and normal terms.
//!
//! Cuts are named by spellings: terms whose variable `k` stands for the
//! atom `x^[k]`. The cuts of `x^[n]` are the atoms `1, ..., n`. The leaves
//! of `∂T` correspond, in order, to the descents of `T` in lexicographic
//! order, and the cut at the leaf matching `(α1, ..., αm)` is equivalent to
//! `cut(T, α1) ◁ (cut(T, α2) ◁ ... cut(T, αm))`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::address::Address;
use crate::braid::{braid_equiv, braid_shelf_op, eval_term, BraidWord};
use crate::error::{Error, Result};
use crate::ld::derive;
use crate::search::CancelToken;
use crate::term::{Term, View};

/// `α ⋙ β`: at the first position where they differ `α` has `1` and `β`
/// has `0`, and `α` has a further `0` after that position.
pub fn is_descent_step(alpha: &Address, beta: &Address) -> bool {
    let (a, b) = (alpha.bits(), beta.bits());
    let k = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    k < a.len() && k < b.len() && a[k] && !b[k] && a[k + 1..].contains(&false)
}

/// A chain `α1 ⋙ α2 ⋙ ... ⋙ αm` of leaf addresses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Descent(pub Vec<Address>);

impl fmt::Display for Descent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All descents of `T`, in lexicographic order (leaf order on entries,
/// a sequence before its extensions).
pub fn descents(t: &Term) -> Vec<Descent> {
    let leaves = t.leaf_addresses();
    let mut out = Vec::new();
    fn extend(chain: &mut Vec<usize>, leaves: &[Address], out: &mut Vec<Descent>) {
        out.push(Descent(chain.iter().map(|&i| leaves[i].clone()).collect()));
        let last = *chain.last().expect("nonempty chain");
        for j in 0..last {
            if is_descent_step(&leaves[last], &leaves[j]) {
                chain.push(j);
                extend(chain, leaves, out);
                chain.pop();
            }
        }
    }
    for i in 0..leaves.len() {
        extend(&mut vec![i], &leaves, &mut out);
    }
    out
}

/// Number of descents of `T`, i.e. the size of `∂T`, without listing them.
/// Saturates at `usize::MAX`.
pub fn descent_count(t: &Term) -> usize {
    let leaves = t.leaf_addresses();
    let mut from: Vec<usize> = Vec::with_capacity(leaves.len());
    for i in 0..leaves.len() {
        let mut c: usize = 1;
        for j in 0..i {
            if is_descent_step(&leaves[i], &leaves[j]) {
                c = c.saturating_add(from[j]);
            }
        }
        from.push(c);
    }
    from.into_iter().fold(0usize, |a, b| a.saturating_add(b))
}

/// A term over atoms: variable `k` denotes `x^[k]`.
pub type Spelling = Term;

/// Replaces each atom `k` with `x^[k]`.
pub fn expand_spelling(s: &Spelling) -> Term {
    s.map_vars(&|k| Term::right_power(k as usize).expect("atoms start at 1"))
}

/// Abridged Polish notation, e.g. `21∘1∘`. Atoms above 9 are bracketed.
pub fn abridged(s: &Spelling) -> String {
    let mut out = String::new();
    fn go(s: &Spelling, out: &mut String) {
        match s.view() {
            View::Var(k) if k < 10 => out.push_str(&k.to_string()),
            View::Var(k) => out.push_str(&format!("[{k}]")),
            View::App(_, l, r) => {
                go(l, out);
                go(r, out);
                out.push('∘');
            }
        }
    }
    go(s, &mut out);
    out
}

/// `∂^p x^[n]` together with the spelling of the cut at each leaf.
#[derive(Clone, Debug)]
pub struct CutLevel {
    pub term: Term,
    pub spellings: Vec<Spelling>,
}

impl CutLevel {
    /// The cuts of `x^[n]`: atoms `1, ..., n`.
    pub fn base(n: usize) -> Result<CutLevel> {
        let term = Term::right_power(n)?;
        let spellings = (1..=n as u32).map(Term::var).collect();
        Ok(CutLevel { term, spellings })
    }

    /// The level of `∂T` computed from the level of `T`.
    pub fn next(&self) -> Result<CutLevel> {
        let term = derive(&self.term)?;
        let leaves = self.term.leaf_addresses();
        let index: HashMap<&Address, usize> =
            leaves.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let spellings: Vec<Spelling> = descents(&self.term)
            .into_iter()
            .map(|d| {
                let mut parts = d.0.iter().rev().map(|a| self.spellings[index[a]].clone());
                let last = parts.next().expect("nonempty descent");
                parts.fold(last, |acc, s| Term::op(s, acc))
            })
            .collect();
        debug_assert_eq!(spellings.len(), term.size());
        Ok(CutLevel { term, spellings })
    }

    /// Spellings of the proper cuts (all leaves but the rightmost).
    pub fn proper(&self) -> &[Spelling] {
        &self.spellings[..self.spellings.len() - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalTerm {
    pub degree: usize,
    #[serde(serialize_with = "ser_display")]
    pub spelling: Spelling,
    #[serde(serialize_with = "ser_display")]
    pub term: Term,
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Normal terms found as proper cuts of `∂^p x^[n]`, `p ≤ max_degree`, each
/// listed once with its least degree.
pub fn enumerate_normal(n: usize, max_degree: usize) -> Result<Vec<NormalTerm>> {
    if n < 2 {
        return Err(Error::InvalidParams("n must be at least 2".into()));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut level = CutLevel::base(n)?;
    for degree in 0..=max_degree {
        if degree > 0 {
            level = level.next()?;
        }
        for s in level.proper() {
            if seen.insert(s.clone()) {
                out.push(NormalTerm {
                    degree,
                    spelling: s.clone(),
                    term: expand_spelling(s),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct NormalOptions {
    pub max_degree: usize,
    /// Upper end of the `n` window; `None` means `2·size + 2`.
    pub max_n: Option<usize>,
    /// Maximum number of leaves of a single level `∂^p x^[n]`.
    pub max_leaves: usize,
    pub cancel: Option<CancelToken>,
}

impl Default for NormalOptions {
    fn default() -> Self {
        NormalOptions {
            max_degree: 12,
            max_n: None,
            max_leaves: 200_000,
            cancel: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub degree: usize,
    pub n: usize,
    #[serde(serialize_with = "ser_display")]
    pub spelling: Spelling,
    #[serde(serialize_with = "ser_display")]
    pub term: Term,
}

/// Evaluates spellings in the braid shelf, sharing work between cuts.
#[derive(Default)]
struct SpellingEval(HashMap<Spelling, BraidWord>);

impl SpellingEval {
    fn eval(&mut self, s: &Spelling) -> BraidWord {
        if let Some(w) = self.0.get(s) {
            return w.clone();
        }
        let w = match s.view() {
            View::Var(k) => eval_term(&Term::right_power(k as usize).expect("atoms start at 1"))
                .expect("one-variable term"),
            View::App(_, l, r) => {
                let (a, b) = (self.eval(l), self.eval(r));
                braid_shelf_op(&a, &b)
            }
        };
        self.0.insert(s.clone(), w.clone());
        w
    }
}

/// The normal term LD-equivalent to a one-variable term.
///
/// Degrees are tried in increasing order; for each degree, `n` runs over
/// `[max(h, 2), 2·size + 2]` where `h` is the right height of the input.
/// Equivalence is tested in the braid shelf.
pub fn normal_form(t: &Term, opts: &NormalOptions) -> Result<NormalForm> {
    let target = eval_term(t)?;
    let n_lo = t.right_height().max(2);
    let n_hi = opts.max_n.unwrap_or(2 * t.size() + 2).max(n_lo);
    let mut levels: Vec<Option<CutLevel>> = (n_lo..=n_hi).map(|n| CutLevel::base(n).ok()).collect();
    let mut evaluator = SpellingEval::default();
    let mut tried: HashSet<Spelling> = HashSet::new();
    for degree in 0..=opts.max_degree {
        let mut exhausted = true;
        for (i, slot) in levels.iter_mut().enumerate() {
            if opts.cancel.as_ref().is_some_and(|c| c.is_cancelled()) {
                return Err(Error::Cancelled);
            }
            let Some(level) = slot.as_mut() else { continue };
            if degree > 0 {
                if descent_count(&level.term) > opts.max_leaves {
                    *slot = None;
                    continue;
                }
                *level = level.next()?;
            }
            exhausted = false;
            for s in level.proper() {
                if !tried.insert(s.clone()) {
                    continue;
                }
                if braid_equiv(&target, &evaluator.eval(s)) {
                    return Ok(NormalForm {
                        degree,
                        n: n_lo + i,
                        spelling: s.clone(),
                        term: expand_spelling(s),
                    });
                }
            }
        }
        if exhausted {
            break;
        }
    }
    Err(Error::BudgetExceeded)
}

/// Compares normal forms.
pub fn wp_ld_normalform(t: &Term, u: &Term, opts: &NormalOptions) -> Result<bool> {
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
    let a = normal_form(t, opts)?;
    let b = normal_form(u, opts)?;
    Ok(a.spelling == b.spelling)
}

/// Orders normal terms by degree, then by abridged spelling.
pub fn cmp_normal(a: &NormalTerm, b: &NormalTerm) -> Ordering {
    a.degree
        .cmp(&b.degree)
        .then_with(|| abridged(&a.spelling).cmp(&abridged(&b.spelling)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::wp_ld_semantic;
    use crate::cut::cut;
    use crate::ld::derive_power;
    use crate::parse::parse_infix;
    use crate::term::all_terms_up_to;

    fn t(s: &str) -> Term {
        parse_infix(s).unwrap()
    }
    fn show(ds: &[Descent]) -> Vec<String> {
        ds.iter().map(|d| d.to_string()).collect()
    }

    #[test]
    fn descent_examples() {
        let x3 = Term::right_power(3).unwrap();
        assert_eq!(show(&descents(&x3)), ["(0)", "(10)", "(10,0)", "(11)"]);
        let d = derive(&x3).unwrap();
        assert_eq!(
            show(&descents(&d)),
            ["(00)", "(01)", "(10)", "(10,00)", "(10,01)", "(11)"]
        );
        let dd = derive(&d).unwrap();
        assert_eq!(
            show(&descents(&dd)),
            [
                "(000)",
                "(001)",
                "(01)",
                "(100)",
                "(100,000)",
                "(100,001)",
                "(100,01)",
                "(101)",
                "(101,000)",
                "(101,001)",
                "(101,01)",
                "(11)"
            ]
        );
        assert_eq!(show(&descents(&t("x"))), ["(e)"]);
    }

    #[test]
    fn descents_match_leaves_of_derived_term() {
        for term in all_terms_up_to(5) {
            let d = derive(&term).unwrap();
            assert_eq!(descents(&term).len(), d.size(), "{term}");
            assert_eq!(descent_count(&term), d.size());
            for desc in descents(&term) {
                for w in desc.0.windows(2) {
                    assert!(is_descent_step(&w[0], &w[1]));
                }
            }
        }
    }

    #[test]
    fn spellings_name_the_cuts() {
        for n in 2..=5 {
            let mut level = CutLevel::base(n).unwrap();
            for p in 0..=3 {
                if descent_count(&level.term) > 100 {
                    break;
                }
                if p > 0 {
                    level = level.next().unwrap();
                }
                assert_eq!(
                    level.term,
                    derive_power(&Term::right_power(n).unwrap(), p).unwrap()
                );
                for (leaf, s) in level.term.leaf_addresses().iter().zip(&level.spellings) {
                    let c = cut(&level.term, leaf).unwrap();
                    assert!(
                        wp_ld_semantic(&c, &expand_spelling(s)).unwrap(),
                        "n={n} p={p} leaf {leaf}"
                    );
                }
            }
        }
    }

    #[test]
    fn normal_terms_below_x3() {
        let all = enumerate_normal(3, 3).unwrap();
        let at = |d: usize| -> Vec<String> {
            all.iter()
                .filter(|nt| nt.degree == d)
                .map(|nt| abridged(&nt.spelling))
                .collect()
        };
        assert_eq!(at(0), ["1", "2"]);
        assert_eq!(at(1), ["21∘"]);
        assert_eq!(at(2), ["21∘1∘", "21∘2∘"]);
        assert_eq!(
            at(3),
            [
                "21∘1∘1∘",
                "21∘1∘2∘",
                "21∘1∘21∘∘",
                "21∘2∘1∘",
                "21∘2∘2∘",
                "21∘2∘21∘∘"
            ]
        );
        assert_eq!(all[2].term, t("(x*x)*x"));
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(
                    !wp_ld_semantic(&a.term, &b.term).unwrap(),
                    "{} ~ {}",
                    a.term,
                    b.term
                );
            }
        }
        assert!(enumerate_normal(1, 2).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let opts = NormalOptions::default();
        let x4 = Term::right_power(4).unwrap();
        for s in ["(x*x)*(x*(x*x))", "x*((x*x)*(x*x))"] {
            let nf = normal_form(&t(s), &opts).unwrap();
            assert_eq!(nf.term, x4);
            assert_eq!(nf.degree, 0);
        }
        assert_eq!(normal_form(&t("x"), &opts).unwrap().term, t("x"));
        assert!(wp_ld_normalform(&t("(x*x)*(x*(x*x))"), &t("x*((x*x)*(x*x))"), &opts).unwrap());
        assert!(!wp_ld_normalform(&t("x"), &t("x*x"), &opts).unwrap());
    }
}
