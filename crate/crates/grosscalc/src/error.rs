//! Error type shared by every engine module.

use std::fmt;

/// Errors raised by exact grossone arithmetic and the expression layer.
///
/// Every variant is a domain condition, not a bug: the numeral system is
/// deliberately not closed under general division or powering, and the
/// engine reports the boundary instead of approximating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrossError {
    /// Division by the zero record.
    DivisionByZero,
    /// The quotient is not a finite positional record (e.g. `1/(G+1)`).
    NotExactlyDivisible,
    /// A grosspower that is not a plain integer was requested (e.g. `G^G`).
    NonIntegerGrosspower,
    /// The operand must denote an integer count but does not.
    NotIntegerValued,
    /// The operation needs the parity of a count that has none in scope.
    ParityRequired,
    /// An `ev_mul` cross product would need a term shape outside the
    /// representation (e.g. `G * 2^G` or `2^G * 3^G`).
    UnrepresentableProduct,
    /// A power has no exact value in the representation (e.g. `2^(1/2)`).
    UnrepresentablePower,
    /// A low-order perturbation coefficient failed to vanish; the state is
    /// not a removable singularity at x = 1.
    SingularityNotRemovable,
    /// The requested exponent magnitude exceeds the configured bound.
    UnsupportedExponent,
    /// A count parameter is outside its admissible range.
    InvalidCount,
    /// The operand must be a plain positional record without exponential
    /// terms.
    ExpectedGrossNumber,
    /// Lexical or grammatical error in expression text, with byte offset.
    SyntaxError { pos: usize, msg: String },
    /// An identifier with no binding in the evaluation environment.
    UnboundIdentifier(String),
}

impl GrossError {
    /// Stable machine-readable name, also the first token printed on
    /// stderr by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            GrossError::DivisionByZero => "DivisionByZero",
            GrossError::NotExactlyDivisible => "NotExactlyDivisible",
            GrossError::NonIntegerGrosspower => "NonIntegerGrosspower",
            GrossError::NotIntegerValued => "NotIntegerValued",
            GrossError::ParityRequired => "ParityRequired",
            GrossError::UnrepresentableProduct => "UnrepresentableProduct",
            GrossError::UnrepresentablePower => "UnrepresentablePower",
            GrossError::SingularityNotRemovable => "SingularityNotRemovable",
            GrossError::UnsupportedExponent => "UnsupportedExponent",
            GrossError::InvalidCount => "InvalidCount",
            GrossError::ExpectedGrossNumber => "ExpectedGrossNumber",
            GrossError::SyntaxError { .. } => "SyntaxError",
            GrossError::UnboundIdentifier(_) => "UnboundIdentifier",
        }
    }
}

impl fmt::Display for GrossError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrossError::SyntaxError { pos, msg } => {
                write!(f, "SyntaxError: {msg} at offset {pos}")
            }
            GrossError::UnboundIdentifier(name) => {
                write!(f, "UnboundIdentifier: `{name}` has no binding")
            }
            other => f.write_str(other.name()),
        }
    }
}

impl std::error::Error for GrossError {}

pub type Result<T> = std::result::Result<T, GrossError>;
