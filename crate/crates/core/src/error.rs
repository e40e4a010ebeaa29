use alloc::string::String;

use crate::polyring::VariableId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable {0} is not part of the ring")]
    RingMismatch(VariableId),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("no substitution given for variable {0}")]
    Unmapped(VariableId),
    #[error("walk leaves the coefficient lattice, the minor is identically zero")]
    ZeroMinor,
    #[error("resource limit exceeded: {0}")]
    ResourceExhausted(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
