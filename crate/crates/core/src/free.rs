//! Words in the free group on `x1, x2, ...`.
//!
//! A letter is a nonzero integer: `g` stands for `x_g`, `-g` for `x_g⁻¹`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord(pub Vec<i32>);

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn generator(g: u32) -> FreeWord {
        FreeWord(vec![g as i32])
    }

    /// Builds the reduced form of an arbitrary letter sequence.
    pub fn reduced(letters: impl IntoIterator<Item = i32>) -> FreeWord {
        let mut out = FreeWord::identity();
        for l in letters {
            out.push(l);
        }
        out
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

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != -w[1])
    }

    /// Appends one letter, cancelling against the last letter if possible.
    pub fn push(&mut self, letter: i32) {
        debug_assert!(letter != 0);
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    /// `a⁻¹ · self · a`.
    pub fn conjugate_by(&self, a: &FreeWord) -> FreeWord {
        a.inverse().mul(self).mul(a)
    }

    pub fn first(&self) -> Option<i32> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i32> {
        self.0.last().copied()
    }

    /// Largest generator index occurring, 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.0.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    /// Replaces every letter `±g` by `images[g]^{±1}` and reduces.
    pub fn substitute(&self, image: impl Fn(u32) -> FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in &self.0 {
            let img = image(l.unsigned_abs());
            if l > 0 {
                for &m in &img.0 {
                    out.push(m);
                }
            } else {
                for &m in img.0.iter().rev() {
                    out.push(-m);
                }
            }
        }
        out
    }
}

/// Free reduction: repeatedly deletes adjacent inverse pairs.
pub fn free_reduce(w: &FreeWord) -> FreeWord {
    FreeWord::reduced(w.0.iter().copied())
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses `x1 x2^-1 x1` (unreduced input is kept as written) or `1`.
    fn from_str(s: &str) -> Result<FreeWord> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(FreeWord::identity());
        }
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("bad free-group word `{s}`"),
        };
        s.split_whitespace()
            .map(|tok| {
                let (body, sign) = match tok.strip_suffix("^-1") {
                    Some(b) => (b, -1),
                    None => (tok, 1),
                };
                let idx = body.strip_prefix('x').ok_or_else(bad)?;
                let g: i32 = if idx.is_empty() {
                    1
                } else {
                    idx.parse().map_err(|_| bad())?
                };
                if g < 1 {
                    return Err(bad());
                }
                Ok(sign * g)
            })
            .collect::<Result<Vec<_>>>()
            .map(FreeWord)
    }
}
