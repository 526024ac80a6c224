use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Each variant has a stable machine-readable [`code`](Error::code) used by the
/// CLI's JSON mode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid carrier: {0}")]
    InvalidCarrier(String),
    #[error("empty query: {0}")]
    EmptyQuery(String),
    #[error("broken order: elements {first} and {second} both satisfy the supremum definition")]
    BrokenOrder { first: String, second: String },
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("invalid grade: {0}")]
    InvalidGrade(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },
    #[error("not dominated: |x| is not below |y_1 + ... + y_n|")]
    NotDominated,
    #[error("not positive: {0}")]
    NotPositive(String),
    #[error("degenerate basis: vectors are linearly dependent")]
    DegenerateBasis,
    #[error("no stabilization within {bound} steps")]
    StabilizationOverflow { bound: usize },
    #[error("not a projection band: {0}")]
    NotProjectionBand(String),
    #[error("operator is not fuzzy positive; witness x = {0}")]
    NotPositiveOperator(String),
    #[error("sequence is not monotone at index {index}")]
    NotMonotone { index: u64 },
    #[error("order closure violated: {0}")]
    NotOrderClosed(String),
    #[error("invalid sequence specification: {0}")]
    Spec(String),
    #[error("inconsistent characterizations: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidCarrier(_) => "invalid_carrier",
            Error::EmptyQuery(_) => "empty_query",
            Error::BrokenOrder { .. } => "broken_order",
            Error::InvalidOrder(_) => "invalid_order",
            Error::InvalidGrade(_) => "invalid_grade",
            Error::InvalidSpace(_) => "invalid_space",
            Error::Dimension { .. } => "dimension_error",
            Error::NotDominated => "not_dominated",
            Error::NotPositive(_) => "not_positive",
            Error::DegenerateBasis => "degenerate_basis",
            Error::StabilizationOverflow { .. } => "stabilization_overflow",
            Error::NotProjectionBand(_) => "not_projection_band",
            Error::NotPositiveOperator(_) => "not_positive_operator",
            Error::NotMonotone { .. } => "not_monotone",
            Error::NotOrderClosed(_) => "not_order_closed",
            Error::Spec(_) => "spec_error",
            Error::Inconsistent(_) => "inconsistent",
            Error::Parse(_) => "parse_error",
            Error::Io(_) => "io_error",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(format!("line {} column {}: {}", e.line(), e.column(), e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // [TRIVIAL]
    #[test]
    fn codes_are_distinct() {
        let all = [
            Error::InvalidCarrier(String::new()),
            Error::EmptyQuery(String::new()),
            Error::BrokenOrder { first: String::new(), second: String::new() },
            Error::InvalidOrder(String::new()),
            Error::InvalidGrade(String::new()),
            Error::InvalidSpace(String::new()),
            Error::Dimension { expected: 1, found: 2 },
            Error::NotDominated,
            Error::NotPositive(String::new()),
            Error::DegenerateBasis,
            Error::StabilizationOverflow { bound: 1 },
            Error::NotProjectionBand(String::new()),
            Error::NotPositiveOperator(String::new()),
            Error::NotMonotone { index: 1 },
            Error::NotOrderClosed(String::new()),
            Error::Spec(String::new()),
            Error::Inconsistent(String::new()),
            Error::Parse(String::new()),
            Error::Io(String::new()),
        ];
        let codes: std::collections::BTreeSet<&str> = all.iter().map(Error::code).collect();
        assert_eq!(codes.len(), all.len());
    }
}
