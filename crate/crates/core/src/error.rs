use core::fmt;

/// Errors reported by geometric operations.
///
/// An empty intersection is *not* an error; operations that can produce an
/// empty set return `Option<ConvexBody>` instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vector or body dimension does not match the ambient space.
    DimensionMismatch { expected: usize, found: usize },
    /// An operation received an empty point or body list.
    EmptyInput,
    /// Mixed dimensions inside one input list.
    MixedDimensions,
    /// The ambient dimension is outside the supported range.
    UnsupportedDimension { dim: usize, reason: &'static str },
    /// Diameter-dependent operation applied to a single-point body.
    DegenerateBody(&'static str),
    /// Ball construction with radius ≤ 0.
    NonpositiveRadius,
    /// A gauge unit ball that is not bounded, full-dimensional, and
    /// centrally symmetric with the origin in its interior.
    InvalidGaugeBall(&'static str),
    /// Vertex enumeration of an unbounded halfspace system.
    Unbounded,
    /// A documented operation precondition was violated; the message names it.
    Precondition(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::EmptyInput => write!(f, "empty input"),
            Error::MixedDimensions => write!(f, "input points have mixed dimensions"),
            Error::UnsupportedDimension { dim, reason } => {
                write!(f, "unsupported dimension {dim}: {reason}")
            }
            Error::DegenerateBody(msg) => write!(f, "degenerate body: {msg}"),
            Error::NonpositiveRadius => write!(f, "ball radius must be positive"),
            Error::InvalidGaugeBall(msg) => write!(f, "invalid gauge unit ball: {msg}"),
            Error::Unbounded => write!(f, "halfspace system is unbounded"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
