use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quadratic elements belong to different parameter sets (D = {left} vs D = {right})")]
    DiscriminantMismatch { left: String, right: String },

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("parameter {name} must be nonzero")]
    ZeroParameter { name: &'static str },

    #[error("degenerate parameters (a = {a}, b = {b}): {reason}")]
    DegenerateParameters { a: String, b: String, reason: String },

    /// A closed form left a nonzero multiple of the square root of D behind.
    #[error("{context}: closed form did not collapse to a rational value (sqrt(D) residue {residue})")]
    IrrationalResidue { context: String, residue: String },

    #[error("{context}: negative-exponent term t^{exponent} survived")]
    NegativeExponent { context: String, exponent: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot parse {input:?} as a rational number")]
    Parse { input: String },
}
