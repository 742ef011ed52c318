use alloc::string::String;
use core::fmt;

/// Failures raised by the algebraic constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Inputs with incompatible dimensions or fields.
    DimensionMismatch(String),
    /// A relation that is not a combination of parallel paths of length at least two.
    NotAdmissible(String),
    /// Structure constants that fail associativity, unitality or similar axioms.
    InvalidStructure(String),
    /// A map that is not a morphism of the required kind; carries the witness.
    NotAMorphism(String),
    /// The ground field is too small for the requested computation, or the
    /// semisimple quotient is not split.
    Unsupported(String),
    /// Bookkeeping between two computations disagreed.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
            Error::NotAdmissible(m) => write!(f, "relation not admissible: {m}"),
            Error::InvalidStructure(m) => write!(f, "invalid structure: {m}"),
            Error::NotAMorphism(m) => write!(f, "not a morphism: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Inconsistent(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
