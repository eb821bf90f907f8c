use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("value out of domain: {0}")]
    OutOfDomain(String),
    #[error("invalid continued fraction: {0}")]
    InvalidCf(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a node of the tree")]
    NotATreeNode(String),
    #[error("{value} is not reachable at depth {depth}")]
    NotReachable { value: String, depth: u32 },
    #[error("bracket trace collapsed at step {step}: target is the rational {target}")]
    TraceCollapsed { step: usize, target: String },
    #[error("value too large: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
