use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ZeroValuation,
    #[error("invalid modulus or base: {0}")]
    InvalidBase(String),
    #[error("pair ({m}, {n}) is not ordered: need m > n >= 1")]
    NotOrdered { m: String, n: String },
    #[error("pair ({m}, {n}) is not coprime")]
    NotCoprime { m: String, n: String },
    #[error("pair ({m}, {n}) has both members {parity}")]
    SameParity { m: String, n: String, parity: &'static str },
    #[error("profile undefined: odd member is 1")]
    ProfileUndefined,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    EvenModulus(String),
    #[error("Gaussian modulus has even norm")]
    EvenNorm,
    #[error("arguments are not coprime")]
    NotCoprimeGaussian,
    #[error("factorization timeout on {0}")]
    FactorizationTimeout(String),
    #[error("engine requires 4 | m")]
    EngineRequiresFourDividesM,
    #[error("exponents {0} must be odd")]
    EvenExponent(&'static str),
    #[error("no Pythagorean structure: {0}")]
    NoPythagoreanStructure(String),
    #[error("middle identity fails: 2kl != b^Y")]
    MiddleIdentityFails,
    #[error("{0} is not an exact power of the requested degree")]
    NotPower(String),
    #[error("no representation as a sum of two squares matches")]
    NoRepresentation,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("two-logarithm lower bound inapplicable: {0}")]
    LemmaInapplicable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
