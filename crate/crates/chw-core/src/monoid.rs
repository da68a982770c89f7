//! The monoid of translation endomorphisms of `G_n`.
//!
//! A square integer matrix `a` encodes the endomorphism sending each
//! generator `x_i` to `x_i * a_i`, where `a_i` is the lattice element
//! with exponent vector given by row `i`. Composition of these maps
//! corresponds to the star operation `c_ij = a_ij + (1 + 2 a_jj) b_ij`,
//! whose identity is the zero matrix.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::auto::GEndomorphism;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::lattice::{IntMatrix, LatticeVector};
use crate::word::ReducedWord;

/// The exponent matrix of a translation endomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationMatrix {
    mat: IntMatrix,
}

impl TranslationMatrix {
    /// The zero matrix, identity of the monoid.
    pub fn zero(n: usize) -> Self {
        TranslationMatrix {
            mat: IntMatrix::zero(n, n),
        }
    }

    pub fn from_int_matrix(mat: IntMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::DimensionMismatch {
                left: (mat.rows(), mat.cols()),
                right: (mat.cols(), mat.rows()),
            });
        }
        Ok(TranslationMatrix { mat })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        TranslationMatrix::from_int_matrix(IntMatrix::from_rows(rows)?)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        TranslationMatrix::from_int_matrix(IntMatrix::from_i64_rows(rows)?)
    }

    /// The elementary matrix with a single `1` at row `i`, column `j`.
    pub fn eps(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::eps_scaled(n, i, j, &BigInt::one())
    }

    /// `k` times the elementary matrix at `(i, j)`.
    pub fn eps_scaled(n: usize, i: usize, j: usize, k: &BigInt) -> Result<Self> {
        check_generator_pair(n, i, j)?;
        let mut mat = IntMatrix::zero(n, n);
        mat.set_entry(i - 1, j - 1, k.clone());
        Ok(TranslationMatrix { mat })
    }

    /// The diagonal matrix with a single `-1` at position `i`.
    pub fn delta(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut mat = IntMatrix::zero(n, n);
        mat.set_entry(i - 1, i - 1, -BigInt::one());
        Ok(TranslationMatrix { mat })
    }

    pub fn size(&self) -> usize {
        self.mat.rows()
    }

    /// Entry at row `r`, column `c` (0-based).
    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        self.mat.entry(r, c)
    }

    /// Row `r` (0-based) as a lattice vector.
    pub fn row_vector(&self, r: usize) -> LatticeVector {
        LatticeVector::from_coords(self.mat.row(r).to_vec())
    }

    pub fn as_int_matrix(&self) -> &IntMatrix {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.size()).all(|k| self.entry(k, k).is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        self.mat.is_diagonal()
    }

    /// Entrywise negation; as a monoid element this is the inverse of a
    /// zero-diagonal matrix.
    pub fn neg(&self) -> Self {
        TranslationMatrix {
            mat: self.mat.neg(),
        }
    }

    /// Entrywise sum; coincides with star on zero-diagonal matrices.
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(TranslationMatrix {
            mat: self.mat.add(&other.mat)?,
        })
    }

    /// The monoid operation: `c_ij = a_ij + (1 + 2 a_jj) b_ij`, matching
    /// composition of the encoded endomorphisms with `self` acting
    /// second.
    pub fn star(&self, other: &Self) -> Result<Self> {
        let n = self.size();
        if n != other.size() {
            return Err(Error::DimensionMismatch {
                left: (n, n),
                right: (other.size(), other.size()),
            });
        }
        let column_factor: Vec<BigInt> = (0..n)
            .map(|j| BigInt::one() + BigInt::from(2) * self.entry(j, j))
            .collect();
        Ok(TranslationMatrix {
            mat: IntMatrix::from_fn(n, n, |i, j| {
                self.entry(i, j) + &column_factor[j] * other.entry(i, j)
            }),
        })
    }

    /// A matrix is invertible in the monoid exactly when every diagonal
    /// entry is `0` or `-1`.
    pub fn is_unit(&self) -> bool {
        (0..self.size()).all(|k| {
            let d = self.entry(k, k);
            d.is_zero() || *d == -BigInt::one()
        })
    }

    /// The two-sided star-inverse: entry `(i, j)` is `-a_ij` when
    /// `a_jj = 0` and `a_ij` when `a_jj = -1`, so the diagonal is
    /// preserved.
    pub fn unit_inverse(&self) -> Result<Self> {
        let n = self.size();
        for k in 0..n {
            let d = self.entry(k, k);
            if !d.is_zero() && *d != -BigInt::one() {
                return Err(Error::NotAUnit {
                    index: k + 1,
                    entry: d.clone(),
                });
            }
        }
        Ok(TranslationMatrix {
            mat: IntMatrix::from_fn(n, n, |i, j| {
                if self.entry(j, j).is_zero() {
                    -self.entry(i, j)
                } else {
                    self.entry(i, j).clone()
                }
            }),
        })
    }

    /// Splits into the zero-diagonal part and the diagonal part, whose
    /// star product recovers the matrix.
    pub fn decompose(&self) -> (Self, Self) {
        let n = self.size();
        let off = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::zero()
            } else {
                self.entry(i, j).clone()
            }
        });
        let diag = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.entry(i, j).clone()
            } else {
                BigInt::zero()
            }
        });
        (
            TranslationMatrix { mat: off },
            TranslationMatrix { mat: diag },
        )
    }

    /// Conjugation of a zero-diagonal matrix by `delta_k`: column `k`
    /// changes sign, everything else is untouched.
    pub fn delta_conjugate(&self, k: usize) -> Result<Self> {
        let n = self.size();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, rank: n });
        }
        if let Some(bad) = (0..n).find(|&i| !self.entry(i, i).is_zero()) {
            return Err(Error::NonzeroDiagonal { index: bad + 1 });
        }
        Ok(TranslationMatrix {
            mat: IntMatrix::from_fn(n, n, |i, j| {
                if j + 1 == k {
                    -self.entry(i, j)
                } else {
                    self.entry(i, j).clone()
                }
            }),
        })
    }

    /// The encoded endomorphism: `x_i` maps to the normal form of
    /// `x_i * a_i` with `a_i` the lattice element of row `i`.
    pub fn to_endomorphism(&self) -> GEndomorphism {
        let n = self.size();
        let images = (1..=n)
            .map(|i| {
                GroupElement::from_parts(
                    ReducedWord::generator(n, i).expect("index in range"),
                    self.row_vector(i - 1),
                )
                .expect("ranks agree")
            })
            .collect();
        GEndomorphism::from_images_unchecked(images)
    }
}

impl fmt::Display for TranslationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}

fn check_generator_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, rank: n });
    }
    if i == j {
        return Err(Error::IndicesMustDiffer { index: i });
    }
    Ok(())
}

/// Embedding of the lattice into the unit group: the image of `z` has
/// entry `-2 z_j` at `(i, j)` for `i != j` and zero diagonal. The
/// encoded endomorphism is conjugation by the lattice element `z`.
pub fn iota(z: &LatticeVector) -> TranslationMatrix {
    let n = z.rank();
    TranslationMatrix {
        mat: IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::zero()
            } else {
                BigInt::from(-2) * &z.coords()[j]
            }
        }),
    }
}
