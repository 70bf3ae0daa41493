use thiserror::Error;

use crate::exactmath::ArithError;
use crate::multipoly::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("projective point has all coordinates zero")]
    ZeroPoint,
    #[error("expected {expected} coordinates, got {got}")]
    PointLength { expected: usize, got: usize },
    #[error("polynomial ring mismatch: {0}")]
    RingMismatch(String),
    #[error("equation {index} is not homogeneous: {text}")]
    NotHomogeneous { index: usize, text: String },
    #[error("the zero polynomial is not a valid equation (equation {index})")]
    ZeroEquation { index: usize },
    #[error("base point not on hypersurface: G({point}) = {value}")]
    BaseNotOnHypersurface { point: String, value: String },
    #[error("point {point} does not lie on the variety")]
    PointNotOnVariety { point: String },
    #[error("the two points must be distinct (both are {point})")]
    SamePoints { point: String },
    #[error("polynomial of degree {degree} cannot be expanded along a line")]
    DegreeTooLow { degree: u32 },
    #[error("malformed variety document: {0}")]
    Malformed(String),
    #[error("point count {count} exceeds the enumeration cap {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("prime {p} is smaller than the maximal equation degree {max_degree}; a form of degree d only vanishes identically on a line over GF(p) when p >= d")]
    PrimeTooSmall { p: u32, max_degree: u32 },
    #[error("the variety has only {found} rational points over GF({p}); at least 2 are needed")]
    TooFewPoints { found: usize, p: u32 },
    #[error("positive-dimensional system encountered while solving (affine dimension > 0)")]
    PositiveDimensional,
}

impl Error {
    /// Errors that refuse a well-formed request (enumeration caps, unsound primes).
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::PrimeTooSmall { .. } | Error::TooFewPoints { .. }
        )
    }
}
