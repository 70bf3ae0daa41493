//! Sparse multivariate polynomials over an exact field, projective points,
//! and the expansion of a form along the pencil of lines through a point.

mod monomial;
mod parse;
mod pencil;
mod point;
mod polynomial;

pub use monomial::{grevlex_cmp, lex_cmp, Monomial};
pub use parse::{parse_polynomial, ParseError, MAX_DEGREE};
pub use pencil::expand_line_pencil;
pub use point::ProjectivePoint;
pub use polynomial::Polynomial;
