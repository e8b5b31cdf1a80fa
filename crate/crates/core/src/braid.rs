//! Braid words, the Artin representation, and the braid shelf.
//!
//! `a ◁ b = a · sh(b) · σ1 · sh(a)⁻¹` makes the braid group a shelf in which
//! the one-variable free shelf embeds, which yields a semantic solution to
//! the one-variable LD word problem.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::address::Address;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::ld::{LdLetter, LdWord};
use crate::term::{Term, View};

/// A word in `σ_i^{±1}`: `i` for `σ_i`, `-i` for `σ_i⁻¹`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord(pub Vec<i32>);

impl BraidWord {
    pub fn empty() -> BraidWord {
        BraidWord(Vec::new())
    }

    pub fn new(letters: Vec<i32>) -> Result<BraidWord> {
        if letters.contains(&0) {
            return Err(Error::BadBraid("σ_0 does not exist".into()));
        }
        Ok(BraidWord(letters))
    }

    pub fn sigma(i: u32) -> BraidWord {
        BraidWord(vec![i as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest index `i` such that `σ_i^{±1}` occurs, 0 for the empty word.
    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v)
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs. Changes the word, not the braid.
    pub fn free_reduced(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord(out)
    }

    /// Unicode rendering such as `σ1σ3σ2⁻¹`.
    pub fn pretty(&self) -> String {
        if self.0.is_empty() {
            return "ε".into();
        }
        let mut s = String::new();
        for &l in &self.0 {
            s.push('σ');
            s.push_str(&l.unsigned_abs().to_string());
            if l < 0 {
                s.push_str("⁻¹");
            }
        }
        s
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Whitespace- or comma-separated signed indices, e.g. `1 3 2 1 -2`.
    /// The empty string and `e` denote the empty word.
    fn from_str(s: &str) -> Result<BraidWord> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "ε" {
            return Ok(BraidWord::empty());
        }
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::BadBraid(format!("`{t}` is not a signed index")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(letters)
    }
}

/// `sh`: `σ_i ↦ σ_{i+1}`.
pub fn shift(w: &BraidWord) -> BraidWord {
    BraidWord(
        w.0.iter()
            .map(|&l| if l > 0 { l + 1 } else { l - 1 })
            .collect(),
    )
}

/// Formal inverse: reverses the word and flips signs.
pub fn invert(w: &BraidWord) -> BraidWord {
    BraidWord(w.0.iter().rev().map(|&l| -l).collect())
}

/// Images of `x_1, ..., x_m` under the Artin automorphism of `w`, as a
/// vector indexed from 0. Letters act on the right: `x^{ab} = (x^a)^b`.
pub fn artin_images(w: &BraidWord, m: u32) -> Vec<FreeWord> {
    let m = m.max(w.max_index() + 1) as usize;
    let mut images: Vec<FreeWord> = (1..=m as u32).map(FreeWord::generator).collect();
    // Right to left: `images` holds the automorphism of the processed suffix.
    for &l in w.0.iter().rev() {
        let i = l.unsigned_abs() as usize - 1;
        let a = images[i].clone();
        let b = images[i + 1].clone();
        if l > 0 {
            // x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
            images[i] = a.mul(&b).mul(&a.inverse());
            images[i + 1] = a;
        } else {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
            images[i] = b.clone();
            images[i + 1] = b.inverse().mul(&a).mul(&b);
        }
    }
    images
}

/// The reduced image of `x_g` under the Artin representation of `w`.
pub fn artin_act(w: &BraidWord, g: u32) -> FreeWord {
    assert!(g >= 1, "generators are numbered from 1");
    let images = artin_images(w, g);
    images[g as usize - 1].clone()
}

/// Dehornoy handle reduction. A `σ_i`-handle is a factor `σ_i^e v σ_i^{-e}`
/// where every letter of `v` has index above `i`; it is replaced by `v` with
/// each `σ_{i+1}^d` turned into `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. Reducing the
/// handle that closes first always terminates. The result is empty iff the
/// braid is trivial, and otherwise its lowest-index letter has one sign.
pub fn handle_reduce(w: &BraidWord) -> BraidWord {
    let mut w = w.free_reduced().0;
    let mut r = 0;
    while r < w.len() {
        let i = w[r].unsigned_abs();
        let mut k = r;
        let mut found = None;
        while k > 0 {
            k -= 1;
            let j = w[k].unsigned_abs();
            if j <= i {
                if w[k] == -w[r] {
                    found = Some(k);
                }
                break;
            }
        }
        let Some(k) = found else {
            r += 1;
            continue;
        };
        let e = w[k].signum();
        let up = (i + 1) as i32;
        let mut middle = Vec::with_capacity(r - k + 8);
        for &d in &w[k + 1..r] {
            if d.unsigned_abs() == i + 1 {
                middle.extend_from_slice(&[-e * up, d.signum() * i as i32, e * up]);
            } else {
                middle.push(d);
            }
        }
        w.splice(k..=r, middle);
        // Nothing before `k` changed, so no handle closes there.
        r = k;
    }
    BraidWord(w)
}

/// Decides equality in the braid group: `w⁻¹ w'` must reduce to the empty
/// word under handle reduction.
pub fn braid_equiv(w: &BraidWord, w2: &BraidWord) -> bool {
    handle_reduce(&invert(w).concat(w2)).is_empty()
}

/// Decides equality by comparing Artin images of `x_1, ..., x_{m+1}`.
/// Exact but the images can grow exponentially with the word length.
pub fn braid_equiv_artin(w: &BraidWord, w2: &BraidWord) -> bool {
    let m = w.max_index().max(w2.max_index()) + 1;
    artin_images(w, m) == artin_images(w2, m)
}

/// True when the braid admits an expression with `σ1` and without `σ1⁻¹`,
/// decided by handle reduction.
pub fn sigma1_positive(w: &BraidWord) -> bool {
    is_sigma1_positive_form(&handle_reduce(w))
}

/// At least one `σ1` and no `σ1⁻¹`, read on the word as written.
pub fn is_sigma1_positive_form(w: &BraidWord) -> bool {
    w.0.contains(&1) && !w.0.contains(&-1)
}

/// Larue's criterion: the image of `x1` ends with `x1⁻¹` exactly when the
/// braid admits a σ1-positive expression.
pub fn larue_positive(w: &BraidWord) -> bool {
    artin_act(w, 1).last() == Some(-1)
}

/// `a ◁ b = a · sh(b) · σ1 · sh(a)⁻¹` (unreduced concatenation).
pub fn braid_shelf_op(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.concat(&shift(b))
        .concat(&BraidWord::sigma(1))
        .concat(&invert(&shift(a)))
}

fn check_one_var(terms: &[&Term]) -> Result<()> {
    let mut vars: Vec<u32> = Vec::new();
    for t in terms {
        if !t.is_fwd_only() {
            return Err(Error::BwdNotSupported);
        }
        vars.extend(t.variables());
    }
    vars.sort_unstable();
    vars.dedup();
    if vars.len() > 1 {
        return Err(Error::MultiVariable);
    }
    Ok(())
}

/// Evaluates a one-variable term in the braid shelf with `x ↦ 1`.
pub fn eval_term(t: &Term) -> Result<BraidWord> {
    check_one_var(&[t])?;
    let mut memo = HashMap::new();
    Ok(eval_memo(t, &mut memo))
}

fn eval_memo(t: &Term, memo: &mut HashMap<Term, BraidWord>) -> BraidWord {
    if let Some(w) = memo.get(t) {
        return w.clone();
    }
    let w = match t.view() {
        View::Var(_) => BraidWord::empty(),
        View::App(_, l, r) => {
            let a = eval_memo(l, memo);
            let b = eval_memo(r, memo);
            braid_shelf_op(&a, &b)
        }
    };
    memo.insert(t.clone(), w.clone());
    w
}

/// Semantic solution of the one-variable LD word problem.
pub fn wp_ld_semantic(t: &Term, u: &Term) -> Result<bool> {
    check_one_var(&[t, u])?;
    Ok(braid_equiv(&eval_term(t)?, &eval_term(u)?))
}

/// Compares one-variable terms in the left-divisibility order of the free
/// shelf: `Less` when `T` is an iterated left divisor of `T'` up to LD.
pub fn compare_ld(t: &Term, u: &Term) -> Result<Ordering> {
    check_one_var(&[t, u])?;
    let c = handle_reduce(&invert(&eval_term(t)?).concat(&eval_term(u)?));
    Ok(if c.is_empty() {
        Ordering::Equal
    } else if is_sigma1_positive_form(&c) {
        Ordering::Less
    } else {
        Ordering::Greater
    })
}

/// The blueprint `χ(T)`: `χ(x) = 1`,
/// `χ(T0 ◁ T1) = χ(T0) · sh1(χ(T1)) · LD_ε · sh1(χ(T0))⁻¹`.
pub fn blueprint(t: &Term) -> Result<LdWord> {
    check_one_var(&[t])?;
    let one = Address::ones(1);
    let mut memo: HashMap<Term, LdWord> = HashMap::new();
    fn go(t: &Term, one: &Address, memo: &mut HashMap<Term, LdWord>) -> LdWord {
        if let Some(w) = memo.get(t) {
            return w.clone();
        }
        let w = match t.view() {
            View::Var(_) => LdWord::empty(),
            View::App(_, l, r) => {
                let a = go(l, one, memo);
                let b = go(r, one, memo);
                let mut w = a.clone().concat(&b.shifted(one));
                w.push(LdLetter::new(Address::root(), false));
                w.concat(&a.shifted(one).inverse())
            }
        };
        memo.insert(t.clone(), w.clone());
        w
    }
    Ok(go(t, &one, &mut memo))
}

/// Collapses `LD_α` for `α` containing `0` and maps `LD_{1^i}^{±1}` to
/// `σ_{i+1}^{±1}`.
pub fn blueprint_braid_projection(w: &LdWord) -> BraidWord {
    BraidWord(
        w.letters()
            .iter()
            .filter_map(|l| {
                let i = l.address.as_ones()? as i32 + 1;
                Some(if l.inverse { -i } else { i })
            })
            .collect(),
    )
}
