use crate::variable::Variable;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("variable {0} lies outside the universe of the monomial order")]
    VariableOutsideOrder(Variable),
    #[error("divisor has non-unit leading coefficient {0} over the integers")]
    NonUnitLeadingCoefficient(String),
    #[error("no binding for variable {0} in evaluation point")]
    MissingBinding(Variable),
    #[error("coefficient map only supports integer -> prime field reduction")]
    UnsupportedCoefficientMap,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("index {index} out of range, expected {expected}")]
    IndexOutOfRange { index: String, expected: String },
    #[error("polynomial is not symmetric in x_1..x_{0}")]
    NotSymmetric(u8),
    #[error("iteration bound {0} exceeded in elementary-symmetric conversion")]
    IterationBoundExceeded(usize),
    #[error("ragged minor selection: {rows} rows vs {cols} columns")]
    RaggedMinor { rows: usize, cols: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
