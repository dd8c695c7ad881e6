use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("too many variables ({0}); at most {max} are supported", max = crate::polyring::MAX_VARS)]
    TooManyVariables(usize),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not divisible: {dividend} by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("polynomial is not symmetric in {0} and {1}")]
    NotSymmetric(String, String),

    #[error("cyclotomic conductors differ: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    #[error("value is not a rational integer: {0}")]
    NotRational(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error(
        "dihedral sieving with generators (z1, -det) is only defined for odd n (got n = {0}); \
         the representation ring of I2(n) has an extra generator chi_b when n is even"
    )]
    EvenNUnsupported(u32),

    #[error("{family}: {param} exceeds the enumeration limit {limit}")]
    ScaleExceeded { family: String, param: String, limit: u32 },

    #[error("character inner product is not an integer: {0}")]
    NonIntegral(String),

    #[error("class function violated: {0}")]
    NotClassFunction(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
