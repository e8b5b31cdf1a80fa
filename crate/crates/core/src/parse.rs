//! Infix and Polish syntax for terms.
//!
//! Infix: `term := var | '(' term ')' | term '*' term | term '/' term`, with
//! `*` for `◁` and `/` for `◁̄`. Chains without parentheses associate to the
//! left; printing always parenthesizes fully. Variables are `x1, x2, ...`;
//! a bare `x` means `x1`, and `y`, `z` are shorthands for `x2`, `x3`.
//!
//! Polish: whitespace-separated tokens in left-right-root order, `.` for `◁`
//! and `/` for `◁̄`. Tokens may also be glued (`xx.x.`) when variables are
//! bare `x`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::term::{Op, Term, View};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Var(u32),
    Op(Op),
}

impl Letter {
    pub fn is_var(self) -> bool {
        matches!(self, Letter::Var(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Var(v) => write!(f, "x{v}"),
            Letter::Op(Op::Fwd) => f.write_str("."),
            Letter::Op(Op::Bwd) => f.write_str("/"),
        }
    }
}

/// A word over variables and operation symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolishWord(pub Vec<Letter>);

impl PolishWord {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|w|_X = |w|_OP + 1` and every nonempty proper prefix has more
    /// variables than operators.
    pub fn is_polish(&self) -> bool {
        let mut balance: i64 = 0;
        for l in &self.0 {
            balance += if l.is_var() { 1 } else { -1 };
            if balance <= 0 {
                return false;
            }
        }
        balance == 1
    }

    /// Length of the longest common prefix.
    pub fn common_prefix(&self, other: &PolishWord) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn to_term(&self) -> Result<Term> {
        let mut stack: Vec<Term> = Vec::new();
        for (i, l) in self.0.iter().enumerate() {
            match *l {
                Letter::Var(v) => stack.push(Term::var(v)),
                Letter::Op(op) => {
                    let r = stack.pop();
                    let lt = stack.pop();
                    match (lt, r) {
                        (Some(lt), Some(r)) => stack.push(Term::app(op, lt, r)),
                        _ => {
                            return Err(Error::InvalidPolish(format!(
                                "operator at letter {} lacks operands",
                                i + 1
                            )))
                        }
                    }
                }
            }
        }
        match stack.len() {
            1 => Ok(stack.pop().unwrap()),
            0 => Err(Error::InvalidPolish("empty word".into())),
            n => Err(Error::InvalidPolish(format!("{} operators missing", n - 1))),
        }
    }

    /// Compact rendering, e.g. `xxx..x.` for one-variable words.
    pub fn compact(&self) -> String {
        let one_var = self
            .0
            .iter()
            .all(|l| matches!(l, Letter::Var(1) | Letter::Op(_)));
        let mut s = String::new();
        for l in &self.0 {
            match l {
                Letter::Var(_) if one_var => s.push('x'),
                other => s.push_str(&other.to_string()),
            }
        }
        s
    }
}

impl fmt::Display for PolishWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The Polish expression: `Pol(x) = x`, `Pol(T0 ◁ T1) = Pol(T0) Pol(T1) OP`.
pub fn polish(t: &Term) -> PolishWord {
    let mut out = Vec::with_capacity(2 * t.size() - 1);
    fn go(t: &Term, out: &mut Vec<Letter>) {
        match t.view() {
            View::Var(v) => out.push(Letter::Var(v)),
            View::App(op, l, r) => {
                go(l, out);
                go(r, out);
                out.push(Letter::Op(op));
            }
        }
    }
    go(t, &mut out);
    PolishWord(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dialect {
    Infix,
    Polish,
}

pub fn parse_term(text: &str, dialect: Dialect) -> Result<Term> {
    match dialect {
        Dialect::Infix => parse_infix(text),
        Dialect::Polish => parse_polish(text),
    }
}

pub fn parse_polish(text: &str) -> Result<Term> {
    parse_polish_word(text)?.to_term()
}

pub fn parse_polish_word(text: &str) -> Result<PolishWord> {
    let mut letters = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '.' | '∘' | '*' => {
                letters.push(Letter::Op(Op::Fwd));
                i += 1;
            }
            '/' => {
                letters.push(Letter::Op(Op::Bwd));
                i += 1;
            }
            'x' => {
                let (v, next) = read_var(&chars, i)?;
                letters.push(Letter::Var(v));
                i = next;
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected `{c}` in Polish word"),
                })
            }
        }
    }
    Ok(PolishWord(letters))
}

// Reads `x` followed by an optional decimal index starting at `chars[i]`.
fn read_var(chars: &[char], i: usize) -> Result<(u32, usize)> {
    debug_assert_eq!(chars[i], 'x');
    let mut j = i + 1;
    while j < chars.len() && chars[j].is_ascii_digit() {
        j += 1;
    }
    if j == i + 1 {
        return Ok((1, j));
    }
    let digits: String = chars[i + 1..j].iter().collect();
    match digits.parse::<u32>() {
        Ok(v) if v >= 1 => Ok((v, j)),
        _ => Err(Error::Syntax {
            pos: i,
            msg: format!("bad variable index `{digits}`"),
        }),
    }
}

pub fn parse_infix(text: &str) -> Result<Term> {
    let chars: Vec<char> = text.chars().collect();
    let mut p = InfixParser { chars, pos: 0 };
    let t = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(if p.chars[p.pos] == ')' {
            Error::UnbalancedParens(p.pos)
        } else {
            Error::Syntax {
                pos: p.pos,
                msg: format!("unexpected `{}`", p.chars[p.pos]),
            }
        });
    }
    Ok(t)
}

struct InfixParser {
    chars: Vec<char>,
    pos: usize,
}

impl InfixParser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Term> {
        let mut acc = self.atom()?;
        loop {
            let op = match self.peek() {
                Some('*') | Some('◁') => Op::Fwd,
                Some('/') => Op::Bwd,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.atom()?;
            acc = Term::app(op, acc, rhs);
        }
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek() {
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let t = self.expr()?;
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(t)
                    }
                    None => Err(Error::UnbalancedParens(open)),
                    Some(c) => Err(Error::Syntax {
                        pos: self.pos,
                        msg: format!("expected `)`, found `{c}`"),
                    }),
                }
            }
            Some('x') => {
                let (v, next) = read_var(&self.chars, self.pos)?;
                self.pos = next;
                Ok(Term::var(v))
            }
            Some(c @ ('y' | 'z')) => {
                self.pos += 1;
                Ok(Term::var(if c == 'y' { 2 } else { 3 }))
            }
            Some(')') => Err(Error::UnbalancedParens(self.pos)),
            Some(c) => Err(Error::Syntax {
                pos: self.pos,
                msg: format!("expected a variable or `(`, found `{c}`"),
            }),
            None => Err(Error::Syntax {
                pos: self.pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term> {
        parse_infix(s)
    }
}

/// Prints a term in the Polish dialect accepted by [`parse_polish`].
pub fn print_polish(t: &Term) -> String {
    polish(t).to_string()
}
