use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable-set mismatch: {0}")]
    VariableMismatch(String),
    #[error("not divisible by (1 - m)")]
    NotDivisible,
    #[error("bad evaluation point: {0}")]
    BadEvaluationPoint(String),
    #[error("quarter-integer exponent produced: {0}")]
    QuarterExponent(String),
    #[error("not an element of S: {0}")]
    NotARoot(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("group tag mismatch: {0:?} vs {1:?}")]
    TagMismatch(crate::weyl::GroupTag, crate::weyl::GroupTag),
    #[error("singular psi factor: generator {index}, argument {z}")]
    SingularFactor { index: usize, z: String },
    #[error("walk budget exceeded: length {length} > budget {budget}")]
    WalkBudget { length: usize, budget: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
