//! Exact computation of the multidegrees of toric polar and gradient maps of
//! projective hypersurfaces over prime fields, together with the
//! Chern-Schwartz-MacPherson class and Euler characteristic of the complement
//! of the hypersurface and the coordinate hyperplanes.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`], [`monomial`], [`poly`], [`parse`], [`gcd`]: exact arithmetic.
//! * [`groebner`]: Buchberger's algorithm, elimination, saturation and
//!   Hilbert-series degree extraction.
//! * [`maps`]: rational self-maps of projective space and their multidegrees.
//! * [`classes`]: integer Chow-class vectors.
//! * [`curves`]: plane-curve invariants and the plane degree formula.
//! * [`constructions`]: families of examples and the verification harness.

pub mod classes;
pub mod constructions;
pub mod curves;
pub mod field;
pub mod gcd;
pub mod groebner;
pub mod maps;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use classes::ChowClassVector;
pub use field::{PrimeField, DEFAULT_PRIME};
pub use groebner::{GroebnerBasis, HilbertData, Ideal};
pub use maps::{MultidegreeVector, RandomizationConfig, RationalMapSpec};
pub use monomial::{ExponentVector, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier '{name}' at position {position}")]
    UnknownIdentifier { name: String, position: usize },
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid monomial matrix: {0}")]
    InvalidMatrix(String),
    #[error("random specialization degenerate: {0}")]
    DegenerateRandom(String),
    #[error("trials disagree (unlucky specialization, rerun with another seed or prime): {0}")]
    TrialDisagreement(String),
    #[error("positive-dimensional {0}")]
    PositiveDimensional(String),
    #[error("saturated slice is not a finite set of points (unlucky specialization): {0}")]
    SliceNotFinite(String),
    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },
}

impl Error {
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnknownIdentifier { .. } | Error::NegativeExponent { .. }
        )
    }

    /// Errors that signal an unlucky random specialization rather than bad
    /// input.
    pub fn is_specialization_failure(&self) -> bool {
        matches!(
            self,
            Error::TrialDisagreement(_) | Error::SliceNotFinite(_) | Error::DegenerateRandom(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
