//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::bipoly::BiPoly;

/// Everything that can go wrong in the library.
///
/// Variant names double as the precondition names surfaced by the CLI, so
/// messages start with the variant name.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("InvalidModulus: {modulus} is not a prime in [2, 2^31)")]
    InvalidModulus { modulus: u64 },

    #[error("DivisionByZeroPoly: division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("BothZero: gcd(0, 0) is undefined")]
    BothZero,

    #[error("ZeroPolynomial: operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("InexactDivision: division left a non-zero remainder")]
    InexactDivision,

    #[error("DegreeOrder: pseudo-division needs 0 < deg_y(divisor) <= deg_y(dividend), got {divisor} and {dividend}")]
    DegreeOrder { dividend: usize, divisor: usize },

    #[error("ZeroInput: inputs must be non-zero polynomials")]
    ZeroInput,

    #[error("DegyZero: an input has y-degree 0 after removing its y-content")]
    DegyZero,

    #[error("NotCoprime: the inputs share the common factor {gcd}")]
    NotCoprime { gcd: BiPoly },

    #[error("FieldMismatch: operands belong to different fields or an operation needs a prime field")]
    FieldMismatch,

    #[error("InfiniteMultiplicity: the inputs share a factor vanishing at the query point")]
    InfiniteMultiplicity,

    #[error("CapExceeded: local dimension did not stabilize below truncation order {cap}")]
    CapExceeded { cap: usize },

    #[error("SyntaxError at {position}: expected {expected}")]
    SyntaxError { position: usize, expected: String },

    #[error("NegativeExponent at {position}: exponents must be non-negative integers")]
    NegativeExponent { position: usize },

    #[error("ZeroDenominator at {position}: denominator of a rational literal is zero")]
    ZeroDenominator { position: usize },

    #[error("ModulusMismatch at {position}: fractional literals are not allowed over a prime field")]
    ModulusMismatch { position: usize },
}

/// Short machine-readable name of the violated contract, e.g. `NotCoprime`.
impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidModulus { .. } => "InvalidModulus",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::BothZero => "BothZero",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::InexactDivision => "InexactDivision",
            Error::DegreeOrder { .. } => "DegreeOrder",
            Error::ZeroInput => "ZeroInput",
            Error::DegyZero => "DegyZero",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::FieldMismatch => "FieldMismatch",
            Error::InfiniteMultiplicity => "InfiniteMultiplicity",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::NegativeExponent { .. } => "NegativeExponent",
            Error::ZeroDenominator { .. } => "ZeroDenominator",
            Error::ModulusMismatch { .. } => "ModulusMismatch",
        }
    }
}
