use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("at most {max} variables are supported, requested {requested}")]
    TooManyVariables { requested: usize, max: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("monomial {divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("addition of forms of different degrees ({0} and {1})")]
    DegreeMismatch(u32, u32),
    #[error("linear change of coordinates is singular")]
    SingularMatrix,
    #[error("linear form is zero")]
    ZeroLinearForm,
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("input ideal is not saturated: a generator of its initial ideal involves the last variable")]
    NotSaturated,
    #[error("degenerate staircase: {0}")]
    DegenerateStaircase(&'static str),
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("generic initial ideal unstable: no majority after {samples} coordinate samples")]
    GinUnstable { samples: usize },
    #[error("internal error: unanimous initial ideal is not Borel-fixed")]
    NotBorelFixed,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
