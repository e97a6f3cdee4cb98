use thiserror::Error;

/// Library-wide error type. Variants mirror the documented failure modes of
/// the public operations; anything not listed here is a bug, not an error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("zero polynomial rejected")]
    ZeroPolynomial,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero rational function")]
    DivisionByZero,

    #[error("polynomial is not irreducible: {0}")]
    NotIrreducible(String),

    #[error("singular model: discriminant vanishes identically")]
    SingularModel,

    #[error("point is not on the curve: {0}")]
    PointNotOnCurve(String),

    #[error("isotrivial surface: j-invariant is constant ({0})")]
    IsotrivialCurve(String),

    #[error("sum of minimal discriminant degrees is not divisible by 12 (got {0})")]
    NonintegralChi(String),

    #[error("odd pole order {order} of x at {place}: v-minimal model violated")]
    MinimalityViolation { place: String, order: i64 },

    #[error("cannot identify fiber component at {place}: {detail}")]
    ComponentIdentification { place: String, detail: String },

    #[error("point lies on the divisor: {0}")]
    PointOnDivisor(String),

    #[error("supplied basis is linearly dependent (Gram matrix is singular)")]
    DependentBasis,

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("even or out-of-range degree for unit cover genus: d = {0} (need odd d >= 3)")]
    EvenDegree(i64),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// CLI exit code class: 2 for malformed input, 3 for a violated bound.
    /// Bound violations are raised by the search layer, not here.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
