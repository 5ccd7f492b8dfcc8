use num_bigint::BigUint;
use thiserror::Error;

use crate::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hole stored at level {stored} sits under {depth} binders")]
    InconsistentHoleLevel { stored: usize, depth: usize },

    #[error("no hole number {occurrence} at level {level}")]
    NoSuchHole { level: usize, occurrence: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("term has a free index {index} at depth {depth}")]
    OpenTerm { index: usize, depth: usize },

    #[error("rank {rank} out of range, only {count} terms")]
    RankOutOfRange { rank: BigUint, count: BigUint },

    #[error("no {kind} terms of size {n}")]
    EmptyDomain { kind: Kind, n: usize },

    #[error("oracle budget exceeded: size {n} above cap {cap}")]
    BudgetExceeded { n: usize, cap: usize },

    #[error("no reference table for {0}")]
    NoTable(Kind),

    #[error("malformed reference data in {table} line {line}: {message}")]
    ReferenceData {
        table: String,
        line: usize,
        message: String,
    },

    #[error("invalid characteristic {0:?}")]
    Characteristic(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
