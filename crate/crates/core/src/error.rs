use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Domain errors are values the caller can act on. Internal invariant
/// violations (a theorem-guaranteed exact division leaving a remainder, for
/// instance) panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("the field of rationals cannot be enumerated")]
    InfiniteField,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operands belong to different algebras")]
    ContextMismatch,
    #[error("element is not in A_h: coefficient of y^{index} is not divisible by h^{index}")]
    NotInSubalgebra { index: usize },
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },
    #[error("Ore denominator must be nonzero")]
    ZeroDenominator,
    #[error("operation requires positive characteristic")]
    CharZero,
    #[error("not implemented: {0}")]
    NotImplemented(&'static str),
    #[error("operation needs a nonzero element")]
    ZeroElement,
    #[error("element is not normal")]
    NotNormal,
    #[error("factorization of h is not certified irreducible ({0}); supply it with --h-factored")]
    Unverifiable(String),
    #[error("operation requires deg h >= 1")]
    ConstantH,
    #[error("(alpha, beta) = ({alpha}, {beta}) does not satisfy h(alpha*x + beta) = alpha^deg(h) h(x)")]
    InvalidPair { alpha: String, beta: String },
    #[error("h must be a scalar multiple of x^n with n >= 1")]
    WrongH,
    #[error("kappa endomorphisms exist only in positive characteristic")]
    CharZeroKappa,
    #[error("the characteristic divides k = {0}")]
    PDividesK(u64),
    #[error("element does not commute with x")]
    NotInCentralizer,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("expression mixes the generators `y` and `Y`")]
    MixedGenerators,
    #[error("exponent at position {pos} must be a nonnegative integer")]
    NegativeExponent { pos: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
