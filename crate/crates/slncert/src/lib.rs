//! Exact symbolic verification of the constructive ingredients in the
//! presentation of an invariant algebra attached to the generic n x n
//! matrix: invariant polynomials and principal minors, the semi-invariant
//! determinant d, companion-matrix and Jacobian-minor certificates,
//! symmetric-function conversions, and Groebner-basis presentations over
//! the integers.
//!
//! All arithmetic is exact: integer coefficients are arbitrary precision,
//! and prime-field coefficients are reduced representatives. Every check
//! produces a structured record with a witness, and the assembled report
//! renders to a deterministic line format.

pub mod error;
pub mod invariants;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod suite;
pub mod symfun;
pub mod variable;

pub use error::{Error, Result};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{Domain, DivisionResult, Polynomial};
pub use report::{Assertion, CheckRecord, VerificationReport};
pub use suite::{run_suite, show, CheckKind, SuiteConfig};
pub use variable::Variable;
