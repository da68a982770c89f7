//! Error type shared by all modules of the crate.

use core::fmt;

use num_bigint::BigInt;

/// Errors reported by the arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values of different rank were combined.
    RankMismatch { left: usize, right: usize },
    /// A generator or coordinate index lies outside `1..=rank`.
    IndexOutOfRange { index: usize, rank: usize },
    /// The operation needs two distinct generator indices.
    IndicesMustDiffer { index: usize },
    /// Matrix shapes do not fit the requested operation.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// The image list is not a bijection of `1..=n`.
    InvalidPermutation,
    /// A translation matrix has no star-inverse; the offending diagonal
    /// entry is named.
    NotAUnit { index: usize, entry: BigInt },
    /// A zero-diagonal matrix was required.
    NonzeroDiagonal { index: usize },
    /// Generator images violate a defining relator, so they do not
    /// induce an endomorphism.
    RelatorViolated { i: usize, j: usize },
    /// The image of a lattice generator has a nonempty word part.
    ImageNotInLattice { index: usize },
    /// A matrix that should square to the identity does not.
    NotInvolution,
    /// A matrix that should be invertible over the integers is not.
    NotUnimodular,
    /// The rank is below the minimum this computation is defined for.
    RankTooSmall { rank: usize, min: usize },
    /// The rank exceeds the configured maximum for suite runs.
    RankTooLarge { rank: usize, max: usize },
    /// Enumerating the requested ball would exceed the element cap.
    BallTooLarge { count: BigInt, cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "generator index {index} out of range 1..={rank}")
            }
            Error::IndicesMustDiffer { index } => {
                write!(f, "indices must differ, both equal {index}")
            }
            Error::DimensionMismatch { left, right } => write!(
                f,
                "matrix dimensions {}x{} and {}x{} do not fit",
                left.0, left.1, right.0, right.1
            ),
            Error::InvalidPermutation => write!(f, "image list is not a permutation of 1..=n"),
            Error::NotAUnit { index, entry } => write!(
                f,
                "matrix is not a unit: diagonal entry {entry} at position {index} is not 0 or -1"
            ),
            Error::NonzeroDiagonal { index } => {
                write!(f, "matrix has nonzero diagonal entry at position {index}")
            }
            Error::RelatorViolated { i, j } => write!(
                f,
                "images violate the defining relator for generators {i}, {j}"
            ),
            Error::ImageNotInLattice { index } => write!(
                f,
                "image of the square of generator {index} is not a lattice element"
            ),
            Error::NotInvolution => write!(f, "matrix is not an involution"),
            Error::NotUnimodular => write!(f, "matrix is not invertible over the integers"),
            Error::RankTooSmall { rank, min } => {
                write!(f, "rank {rank} too small, need at least {min}")
            }
            Error::RankTooLarge { rank, max } => {
                write!(f, "rank {rank} too large, at most {max} supported")
            }
            Error::BallTooLarge { count, cap } => {
                write!(f, "ball holds {count} elements, above the cap of {cap}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
