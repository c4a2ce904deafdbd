use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("series order too small for this operation")]
    OrderTooSmall,

    #[error("series must have a zero constant term")]
    NonzeroConstantTerm,

    #[error("series must have constant term 1")]
    NonUnitConstantTerm,

    #[error("truncation degrees differ ({left} vs {right})")]
    TruncMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the truncation degree {trunc}")]
    DegreeOverflow { degree: usize, trunc: usize },

    #[error("operator is not invertible: {0}")]
    NotInvertible(String),

    #[error("operator does not lower degree by exactly one (witness x^{degree})")]
    NotDegreeLowering { degree: usize },

    #[error("operators do not commute (witness x^{degree})")]
    NotCommuting { degree: usize },

    #[error("sequence entry p_{index} has {}, expected degree {index}", describe_degree(found))]
    SequenceDegree { index: usize, found: Option<usize> },

    #[error("expected {expected} entries, found {found}")]
    Length { expected: usize, found: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("linear system is underdetermined")]
    Underdetermined,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("family {0} has no closed-form Sheffer operator")]
    NoStatedOperator(String),

    /// A computation contradicted a proven identity.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn describe_degree(found: &Option<usize>) -> String {
    match found {
        Some(d) => format!("degree {d}"),
        None => "the zero polynomial".to_string(),
    }
}
