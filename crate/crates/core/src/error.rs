use thiserror::Error;

/// Errors raised by the arithmetic, reduction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation `{0}` is undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible: {0}")]
    ReducibleModulus(String),
    #[error("field and place do not match: {0}")]
    PlaceMismatch(String),
    #[error("element is not integral at the place (valuation {0})")]
    NotIntegral(i64),
    #[error("Newton polygon needs the leading point and at least one other finite point")]
    DegenerateNewtonPolygon,
    #[error("Hensel lifting failed: {0}")]
    Hensel(String),
    #[error("insufficient p-adic precision: {0}")]
    Precision(String),
    #[error("element is not a square")]
    NotSquare,
    #[error("residue characteristic {0} is not supported (need >= 5)")]
    UnsupportedCharacteristic(u64),
    #[error("Weierstrass model is singular")]
    Singular,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("point order exceeds bound {0}")]
    OrderBoundExceeded(u64),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("unknown fixture label `{0}`")]
    UnknownFixture(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
