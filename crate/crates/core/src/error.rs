use thiserror::Error;

use crate::address::Address;
use crate::ld::Direction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbalanced parentheses at position {0}")]
    UnbalancedParens(usize),
    #[error("invalid Polish word: {0}")]
    InvalidPolish(String),
    #[error("invalid address `{0}`")]
    BadAddress(String),
    #[error("address {0} is not in the skeleton")]
    AddressOutOfSkeleton(Address),
    #[error("address {0} is not a leaf")]
    NotALeaf(Address),
    #[error("letter index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("powers start at 1, got {0}")]
    InvalidPower(usize),
    #[error("LD_{address} ({direction:?}) not applicable{}", step.map(|s| format!(" at step {s}")).unwrap_or_default())]
    NotApplicable {
        address: Address,
        direction: Direction,
        step: Option<usize>,
    },
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("search cancelled")]
    Cancelled,
    #[error("operation ◁̄ is not supported here")]
    BwdNotSupported,
    #[error("term involves more than one variable")]
    MultiVariable,
    #[error("address {0} has no factor 10")]
    NoFactor10(Address),
    #[error("internal: no solution sequence at clash address {0}")]
    InternalSolUndefined(Address),
    #[error("table size 2^{requested} exceeds cap 2^{cap}")]
    CapExceeded { requested: u32, cap: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("variable x{0} has no assigned value")]
    UnboundVariable(u32),
    #[error("table is not generated by {0}")]
    NotMonogenerated(usize),
    #[error("invalid braid word: {0}")]
    BadBraid(String),
    #[error("invalid table: {0}")]
    BadTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
