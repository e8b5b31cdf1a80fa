//! Binary addresses locating subterms: `0` is the left child, `1` the right
//! child, and the empty address is the root (printed `e`).

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Address(Vec<bool>);

impl Address {
    pub fn root() -> Address {
        Address(Vec::new())
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Address {
        Address(bits.into_iter().collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: bool) -> Address {
        let mut v = self.0.clone();
        v.push(bit);
        Address(v)
    }

    pub fn parent(&self) -> Option<Address> {
        if self.0.is_empty() {
            None
        } else {
            Some(Address(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    /// `prefix ⌢ self`.
    pub fn prefixed(&self, prefix: &Address) -> Address {
        let mut v = prefix.0.clone();
        v.extend_from_slice(&self.0);
        Address(v)
    }

    /// `self ⌢ suffix`.
    pub fn concat(&self, suffix: &Address) -> Address {
        suffix.prefixed(self)
    }

    pub fn starts_with(&self, prefix: &Address) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn contains_zero(&self) -> bool {
        self.0.contains(&false)
    }

    /// `Some(i)` when the address is `1^i`.
    pub fn as_ones(&self) -> Option<usize> {
        if self.0.iter().all(|&b| b) {
            Some(self.0.len())
        } else {
            None
        }
    }

    pub fn ones(n: usize) -> Address {
        Address(vec![true; n])
    }

    pub fn zeros(n: usize) -> Address {
        Address(vec![false; n])
    }

    /// Left-to-right order on the nodes of a tree when both addresses are
    /// leaves: the first differing bit decides.
    pub fn leaf_cmp(&self, other: &Address) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Address {
    type Err = Error;

    /// Accepts a bit string, or `e` / `ε` / `∅` for the root.
    fn from_str(s: &str) -> Result<Address, Error> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "ε" || s == "∅" {
            return Ok(Address::root());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::BadAddress(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Address)
    }
}

/// Parses a comma-separated address list such as `1,e,0`.
pub fn parse_address_list(s: &str) -> Result<Vec<Address>, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}
