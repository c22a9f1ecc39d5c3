//! Exact polynomial arithmetic over the rationals.

use thiserror::Error;

pub mod dense;
pub mod multi;
mod parse;
pub mod ratfunc;
mod resultant;
mod squarefree;

pub use dense::{Coeff, DensePoly, UniPoly};
pub use multi::{Monomial, MultiPoly, Var};
pub use parse::parse_poly;
pub use ratfunc::RatFunc;
pub use resultant::{bareiss_determinant, resultant};
pub use squarefree::{square_part_decompose, SquarePart};

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable {name:?} at offset {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("both polynomials have degree 0 in {0}")]
    DegenerateResultant(Var),
    #[error("polynomial is not a binary form in x0, x2")]
    NotHomogeneous,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("square-part decomposition did not reproduce the input")]
    InexactFactorization,
}
