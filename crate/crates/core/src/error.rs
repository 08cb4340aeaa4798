use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Asked for the primitive direction of the zero vector.
    NoPrimitiveDirection,
    /// Matrix dimensions do not fit the operation.
    Shape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    NotUnimodular,
    /// Input points do not affinely span 3-space.
    Degenerate,
    /// The polar of a non-reflexive polytope is not a lattice polytope.
    DualNotLattice,
    CoincidentEndpoints,
    InvalidN(i64),
    /// Two triangles fail one of the adjacency conditions.
    NotAdjacentPair(&'static str),
    /// A consistency check failed; this points at a bug or at an input that
    /// violates a documented precondition.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NoPrimitiveDirection => f.write_str("no primitive direction"),
            Error::Shape { expected, found } => write!(
                f,
                "wrong shape: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NotUnimodular => f.write_str("not unimodular"),
            Error::Degenerate => f.write_str("degenerate: not full-dimensional"),
            Error::DualNotLattice => f.write_str("dual is not a lattice polytope"),
            Error::CoincidentEndpoints => f.write_str("segment endpoints coincide"),
            Error::NotAdjacentPair(why) => write!(f, "not an adjacent A_n pair: {why}"),
            Error::InvalidN(n) => write!(f, "n must be at least 1, got {n}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
