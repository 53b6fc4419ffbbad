use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("field GF({p}^{e}) exceeds the supported size (q <= 65536)")]
    UnsupportedSize { p: u64, e: u32 },
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("element {value} is out of range for GF({q})")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("Frobenius index {h} must lie in [0, {e})")]
    InvalidExponentIndex { h: u32, e: u32 },

    #[error("polynomial division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("lcm requires nonzero inputs")]
    ZeroInput,
    #[error("irreducibility is defined for degree >= 1")]
    DegreeZeroInput,
    #[error("degree must be positive")]
    NonPositiveDegree,
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("weighted permutation weights must be nonzero")]
    ZeroWeight,
    #[error("repeated node in Cauchy matrix construction")]
    RepeatedNode,
    #[error("x_{i} + y_{j} = 0 in Cauchy matrix construction")]
    SingularCell { i: usize, j: usize },
    #[error("Vandermonde nodes must be 2n distinct elements")]
    NotDistinct,
    #[error("exhaustive minor check limited to min(rows, cols) <= {limit}, got {got}")]
    TooLargeForExhaustiveCheck { limit: usize, got: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,

    #[error("generator matrix has no columns")]
    EmptyMatrix,
    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,
    #[error("enumerating {count} codewords exceeds the limit of {limit}")]
    TooLargeToEnumerate { count: u128, limit: u128 },
    #[error("matrix is not a weighted permutation matrix")]
    NotMonomial,
    #[error("codes have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("invalid dimensions: {0}")]
    InvalidDims(String),
    #[error("no monomial map reaching l = {target} within {budget} trials")]
    NotFoundWithinBudget { target: usize, budget: usize },
    #[error("gamma = {gamma} must satisfy 0 <= gamma <= l = {ell}")]
    GammaOutOfRange { gamma: usize, ell: usize },
    #[error("matrix is not super-regular")]
    NotSuperRegular,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),

    #[error("denominator vanishes at evaluation point {0}")]
    RootAtEvaluationPoint(u32),
    #[error("denominator degree {deg} exceeds code length {n}")]
    DegreeTooLarge { deg: usize, n: usize },
    #[error("invalid GRS specification: {0}")]
    InvalidSpec(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("degree condition violated: {0}")]
    DegreeConditionViolated(String),
    #[error("theorem precondition {condition} violated: {detail}")]
    TheoremPreconditionViolated { condition: u8, detail: String },
    #[error("lcm degree {deg} exceeds code length {n}")]
    LcmDegreeTooLarge { deg: usize, n: usize },

    #[error("distance computation too expensive: {0}")]
    DistanceTooExpensive(String),
    #[error("catalog has no code with parameters [{n}, {k}]")]
    CatalogMiss { n: usize, k: usize },
    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
