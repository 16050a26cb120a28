use std::fmt;

/// The error type for fallible operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A bottom pFq parameter is a nonpositive integer, so some Pochhammer
    /// factor in the denominator would vanish.
    InvalidBottomParameter { value: String },
    /// Two multivariate objects (or an index and a product) disagree on the
    /// number of variables.
    ArityMismatch { expected: usize, got: usize },
    /// Every exponent of a linear-form product is zero; the constant 1 is
    /// not representable as a product.
    AllExponentsZero,
    /// A doubled factor requires the last two exponents to sum to -1.
    DoubledConstraint { sum: String },
    /// The requested operation is not defined for products with a doubled
    /// factor.
    DoubledUnsupported,
    /// Geometric expansion needs a polynomial with zero constant term.
    NonzeroConstantTerm,
    /// Diagonal extraction to the requested order needs a larger total
    /// degree bound.
    InsufficientBound { needed: usize, bound: usize },
    /// Grade-2 search needs an explicit bottom parameter equal to 1.
    NoUnitBottom,
    /// A builder or constructor was given a structurally invalid input.
    DegenerateSpec { reason: String },
    /// The scenario name is not one of the known reproduce scenarios.
    UnknownScenario { name: String },
    /// A scenario was invoked without a required argument.
    MissingArgument { name: String },
    /// A textual input (rational, product, parameter list) failed to parse.
    Parse { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidBottomParameter { value } => {
                write!(f, "bottom parameter {value} is a nonpositive integer")
            }
            Error::ArityMismatch { expected, got } => {
                write!(
                    f,
                    "arity mismatch: expected {expected} variables, got {got}"
                )
            }
            Error::AllExponentsZero => {
                write!(f, "all exponents are zero; the product is the constant 1")
            }
            Error::DoubledConstraint { sum } => write!(
                f,
                "doubled factor requires the last two exponents to sum to -1, got {sum}"
            ),
            Error::DoubledUnsupported => {
                write!(
                    f,
                    "operation is not defined for products with a doubled factor"
                )
            }
            Error::NonzeroConstantTerm => {
                write!(f, "geometric expansion requires a zero constant term")
            }
            Error::InsufficientBound { needed, bound } => write!(
                f,
                "diagonal extraction needs total degree bound {needed}, series only holds {bound}"
            ),
            Error::NoUnitBottom => {
                write!(
                    f,
                    "grade-2 search requires an explicit bottom parameter equal to 1"
                )
            }
            Error::DegenerateSpec { reason } => write!(f, "{reason}"),
            Error::UnknownScenario { name } => write!(f, "unknown scenario \"{name}\""),
            Error::MissingArgument { name } => write!(f, "missing scenario argument \"{name}\""),
            Error::Parse { message } => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for Error {}
