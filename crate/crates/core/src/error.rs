use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("invalid braid token `{0}`")]
    BadToken(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("gcd({a_name},{b_name}) = gcd({a},{b}) = {gcd} != 1")]
    GcdViolation {
        a_name: &'static str,
        a: u64,
        b_name: &'static str,
        b: u64,
        gcd: u64,
    },
    #[error("index {index} outside {range}")]
    IndexOutOfRange { index: i64, range: String },
    #[error("the closed-form braid needs gcd(q,p) = 1, got d = {0}")]
    NotPrimitive(u64),
    #[error("q = {0} must be odd")]
    EvenQ(u64),
    #[error("t = {0} is not a crossing value")]
    NotACrossingValue(String),
    #[error("critical phase: {0}")]
    CriticalPhase(String),
    #[error("closure has {strands} strands, above the bracket limit of {limit}")]
    StrandLimit { strands: usize, limit: usize },
    #[error("closure has {0} components; the Jones polynomial is only computed for knots")]
    MultiComponent(usize),
    #[error("bracket exponent {0} is not divisible by 4")]
    NonIntegerExponent(i64),
    #[error("Rudolph count gives a non-integral 4-genus: (1 - {strands} + {factors})/2")]
    NonIntegerGenus { strands: i64, factors: i64 },
    #[error("cannot parse polynomial: {0}")]
    BadPolynomial(String),
}
