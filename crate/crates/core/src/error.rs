use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The image sequence is not a bijection on `{0, .., n-1}`.
    InvalidPermutation { reason: &'static str },
    /// Two objects that must live on the same ground set (or have the same
    /// degree) do not.
    DimensionMismatch { what: &'static str, left: usize, right: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    /// A tuple needs at least one permutation and at least one point.
    EmptyTuple,
    /// The operation requires a connected (transitive) tuple.
    NotTransitive { reached: usize, n: usize },
    /// Conjugator extraction was asked to pair components with different labels.
    LabelMismatch,
    /// A produced conjugator failed verification. Always a bug.
    VerificationFailed,
    /// Brute force refused an instance above its size cap.
    OracleCapExceeded { n: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPermutation { reason } => write!(f, "invalid permutation: {reason}"),
            Error::DimensionMismatch { what, left, right } => {
                write!(f, "{what} mismatch: {left} vs {right}")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            Error::EmptyTuple => f.write_str("a tuple needs n >= 1 and d >= 1"),
            Error::NotTransitive { reached, n } => {
                write!(f, "not transitive: reached {reached} of {n} vertices")
            }
            Error::LabelMismatch => f.write_str("canonical labels differ"),
            Error::VerificationFailed => {
                f.write_str("internal error: produced conjugator failed verification")
            }
            Error::OracleCapExceeded { n, cap } => {
                write!(f, "brute force capped at n = {cap}, got n = {n}")
            }
        }
    }
}

impl core::error::Error for Error {}
