//! Word problems for left selfdistributivity `x ◁ (y ◁ z) = (x ◁ y) ◁ (x ◁ z)`
//! and its relatives: terms and the LD rewriting calculus, the braid-group
//! shelf, syntactic and semantic solvers, free racks and quandles, and finite
//! shelves including Laver tables.

pub mod address;
pub mod braid;
pub mod cut;
pub mod error;
pub mod free;
pub mod ld;
pub mod parse;
pub mod rack;
pub mod search;
pub mod shelf;
pub mod term;
pub mod wp;

pub use address::Address;
pub use error::{Error, Result};
pub use ld::{Direction, LdLetter, LdWord};
pub use parse::{parse_infix, parse_polish, polish, PolishWord};
pub use search::{CancelToken, SearchLimits};
pub use term::{Op, Term, View};
