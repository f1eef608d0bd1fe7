use thiserror::Error;

/// Errors surfaced by the library for invalid inputs or guarded refusals.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("vertex multiplicity must be at least 1")]
    EmptyVertex,

    #[error("arbor is not linear (a vertex has more than one child)")]
    NonLinear,

    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),

    #[error("interpolation nodes must have distinct abscissae")]
    DuplicateAbscissa,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("empty interval: left endpoint exceeds right endpoint")]
    EmptyInterval,

    #[error("monomial with zero V-exponent has no inverse transform")]
    ZeroVExponent,

    #[error("transform limit has a nonzero negative power of v")]
    NegativePowerResidue,

    #[error("substitution does not clear to a polynomial")]
    NonPolynomial,

    #[error("series constant term is not an invertible scalar")]
    NonInvertibleSeries,

    #[error("guard exceeded: {what} needs {needed}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        needed: u64,
        limit: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
