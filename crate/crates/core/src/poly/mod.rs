//! Exact multivariate polynomials over the rationals.

mod gcd;
mod order;
mod parse;
mod polynomial;
mod power_product;
mod ring;

use thiserror::Error;

pub use gcd::{gcd_of_all, multivariate_gcd};
pub use order::TermOrder;
pub(crate) use parse::{Cursor, Tok};
pub use parse::{parse_polynomial, ParseError, ParseErrorKind, Position};
pub use polynomial::{determinant, Polynomial};
pub use power_product::{monomials_of_degree, DisplayPowerProduct, PowerProduct};
pub use ring::Ring;
pub(crate) use ring::same_ring;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("`{0}` is not a valid variable name")]
    BadVariableName(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("power products of arity {left} and {right} cannot be compared")]
    ArityMismatch { left: usize, right: usize },
    #[error("operands belong to different rings or term orders")]
    RingMismatch,
    #[error("unknown term order `{0}`")]
    UnknownOrder(String),
    #[error("coordinate change must be a {expected}x{expected} matrix, got {rows} rows")]
    MatrixShape { expected: usize, rows: usize },
    #[error("coordinate change matrix is singular")]
    SingularMatrix,
}
