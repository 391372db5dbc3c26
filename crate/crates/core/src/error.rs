use alloc::string::String;
use core::fmt;

/// Errors raised by the parameter algebra, the enumerator, linked-pair
/// analysis, the graph engine and the constructions.
///
/// Structural defects of an input graph are not errors; see
/// [`Violation`](crate::engine::Violation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An intermediate value left the range of the working integer type.
    Overflow,
    /// `(k, c)` outside `k >= 3, k > c >= 1`, or `q`/`c`/`N` out of range.
    InvalidParameters(String),
    /// The displayed forms of a Krein parameter evaluated to different values.
    KreinFormMismatch {
        which: u8,
        form: &'static str,
    },
    /// A closed-form linked-pair quantity disagrees with the derived value.
    LinkedPairMismatch {
        side: &'static str,
        field: &'static str,
    },
    /// The forced `q` is not a positive integer, or `c - q < 1`.
    NotLinkedPairCandidate(String),
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A vertex lies at distance greater than two from the base vertex.
    NotDiameterTwo {
        base: usize,
        vertex: usize,
    },
    X2Disconnected {
        base: usize,
    },
    X2DiameterOutOfRange {
        base: usize,
        diameter: usize,
    },
    /// The trace system produced a negative or fractional multiplicity.
    InconsistentMultiplicities(String),
    CoincidentEigenvalues,
    /// The Moore-case antipodality check was asked for `c != 1`.
    NotMooreCase {
        c: i128,
    },
    InvalidGraph(String),
    DesignInvariant(&'static str),
    UnknownGraph(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => write!(f, "arithmetic overflow"),
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::KreinFormMismatch { which, form } => {
                write!(f, "Krein parameter K{which}: form `{form}` disagrees")
            }
            Error::LinkedPairMismatch { side, field } => {
                write!(
                    f,
                    "linked pair {side} side: closed form for `{field}` disagrees with derivation"
                )
            }
            Error::NotLinkedPairCandidate(msg) => write!(f, "not a linked-pair candidate: {msg}"),
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "dimension mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NotDiameterTwo { base, vertex } => {
                write!(
                    f,
                    "vertex {vertex} is not within distance 2 of vertex {base}"
                )
            }
            Error::X2Disconnected { base } => {
                write!(f, "second subconstituent at vertex {base} is disconnected")
            }
            Error::X2DiameterOutOfRange { base, diameter } => write!(
                f,
                "second subconstituent at vertex {base} has diameter {diameter}, expected 2 or 3"
            ),
            Error::InconsistentMultiplicities(msg) => {
                write!(f, "inconsistent eigenvalue multiplicities: {msg}")
            }
            Error::CoincidentEigenvalues => write!(f, "candidate eigenvalues coincide"),
            Error::NotMooreCase { c } => write!(f, "antipodal check requires c = 1, got c = {c}"),
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::DesignInvariant(what) => write!(f, "design invariant failed: {what}"),
            Error::UnknownGraph(name) => write!(f, "unknown graph `{name}`"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
