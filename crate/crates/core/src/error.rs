use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("pole at s = {0}")]
    Pole(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// The candidate leading coefficient ball contains zero, so the claimed
    /// order could not be certified at the working precision.
    #[error("unverified order {order} at s = {point}: leading coefficient ball contains 0")]
    UnverifiedOrder { point: i64, order: i64 },

    #[error("order mismatch at n = {point}: analytic {analytic}, closed form {closed_form}")]
    OrderMismatch {
        point: i64,
        analytic: i64,
        closed_form: i64,
    },

    #[error("internal mismatch: {0}")]
    Mismatch(String),

    #[error("negative dimension {dim} in degree {degree}: inconsistent Hodge input")]
    NegativeDimension { degree: i64, dim: i64 },

    #[error("duality violation in degree {degree}: {detail}")]
    DualityViolation { degree: i64, detail: String },

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("singular curve: {0}")]
    SingularCurve(String),

    #[error("overflow guard: {0}")]
    Overflow(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("conductor-discriminant mismatch: product of conductors {product}, |disc| {disc}")]
    ConductorDiscriminant { product: String, disc: String },

    #[error("signature mismatch: r1 + 2 r2 = {sum}, degree {degree}")]
    Signature { sum: i64, degree: i64 },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
