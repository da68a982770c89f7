//! Endomorphisms and automorphisms of `G_n` as generator-image tuples.
//!
//! The named automorphisms are the permutation lifts, the
//! Fouxe-Rabinovitch lifts conjugating one generator by another, the
//! elementary translations multiplying a generator by the square of
//! another, and the sign flips inverting one generator. Formal words in
//! these generators certify automorphisms by construction: each token
//! has an explicit inverse word.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{embed_a, enumerate_ball_capped, GroupElement, DEFAULT_BALL_CAP};
use crate::lattice::{rho_word, IntMatrix, LatticeVector};
use crate::monoid::TranslationMatrix;
use crate::word::{check_ranks, Permutation, ReducedWord, WAutomorphism};

/// An endomorphism of `G_n`, stored as the images of the generators.
///
/// Construction from arbitrary images validates the defining relators
/// on the images, so every value of this type is a genuine
/// endomorphism; equality of image tuples decides equality of maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GEndomorphism {
    rank: usize,
    images: Vec<GroupElement>,
}

/// Evaluates the defining relators on a prospective image tuple; the
/// map extends to an endomorphism exactly when all of them vanish.
pub fn check_von_dyck(images: &[GroupElement]) -> bool {
    von_dyck_failure(images).is_none()
}

fn von_dyck_failure(images: &[GroupElement]) -> Option<(usize, usize)> {
    let n = images.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            // y_i^-1 y_j^2 y_i y_j^2 must be the identity.
            let yi = &images[i];
            let yj_sq = images[j].multiply(&images[j]).expect("ranks agree");
            let value = yi
                .invert()
                .multiply(&yj_sq)
                .and_then(|v| v.multiply(yi))
                .and_then(|v| v.multiply(&yj_sq))
                .expect("ranks agree");
            if !value.is_identity() {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

impl GEndomorphism {
    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank)
            .map(|i| GroupElement::generator(rank, i).expect("index in range"))
            .collect();
        GEndomorphism { rank, images }
    }

    /// Builds an endomorphism from generator images, rejecting tuples
    /// that violate a defining relator.
    pub fn from_images(images: Vec<GroupElement>) -> Result<Self> {
        let rank = images.len();
        for image in &images {
            check_ranks(rank, image.rank())?;
        }
        if let Some((i, j)) = von_dyck_failure(&images) {
            return Err(Error::RelatorViolated { i, j });
        }
        Ok(GEndomorphism { rank, images })
    }

    /// For images known to satisfy the relators: named generators,
    /// compositions, conjugations.
    pub(crate) fn from_images_unchecked(images: Vec<GroupElement>) -> Self {
        debug_assert!(check_von_dyck(&images));
        GEndomorphism {
            rank: images.len(),
            images,
        }
    }

    /// The lift of a permutation automorphism: `x_i` maps to
    /// `x_{sigma(i)}`.
    pub fn permutation(sigma: &Permutation) -> Self {
        let rank = sigma.degree();
        let images = (1..=rank)
            .map(|i| GroupElement::generator(rank, sigma.apply(i)).expect("index in range"))
            .collect();
        GEndomorphism { rank, images }
    }

    /// The lift of the Fouxe-Rabinovitch automorphism: `x_i` maps to
    /// `x_j x_i x_j^-1`, all other generators are fixed.
    pub fn fouxe_rabinovitch(rank: usize, i: usize, j: usize) -> Result<Self> {
        check_pair(rank, i, j)?;
        let conjugator = GroupElement::generator(rank, j)?;
        let images = (1..=rank)
            .map(|k| {
                let g = GroupElement::generator(rank, k).expect("index in range");
                if k == i {
                    g.conjugate(&conjugator).expect("ranks agree")
                } else {
                    g
                }
            })
            .collect();
        Ok(GEndomorphism { rank, images })
    }

    /// The elementary translation `x_i -> x_i x_j^2`.
    pub fn eps(rank: usize, i: usize, j: usize) -> Result<Self> {
        Ok(TranslationMatrix::eps(rank, i, j)?.to_endomorphism())
    }

    /// The power `x_i -> x_i x_j^(2k)` of the elementary translation.
    pub fn eps_pow(rank: usize, i: usize, j: usize, k: &BigInt) -> Result<Self> {
        Ok(TranslationMatrix::eps_scaled(rank, i, j, k)?.to_endomorphism())
    }

    /// The sign flip `x_i -> x_i^-1`.
    pub fn delta(rank: usize, i: usize) -> Result<Self> {
        Ok(TranslationMatrix::delta(rank, i)?.to_endomorphism())
    }

    /// Conjugation by a fixed group element.
    pub fn inner(g: &GroupElement) -> Self {
        let rank = g.rank();
        let images = (1..=rank)
            .map(|i| {
                GroupElement::generator(rank, i)
                    .expect("index in range")
                    .conjugate(g)
                    .expect("ranks agree")
            })
            .collect();
        GEndomorphism { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// Image of generator `i` (1-based).
    pub fn image(&self, i: usize) -> &GroupElement {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, image)| {
            image.shift().is_zero() && image.word().letters() == [k + 1]
        })
    }

    /// Applies the map: each word letter is replaced by its image, and
    /// the lattice part maps through the images of the squares.
    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        check_ranks(self.rank, g.rank())?;
        let mut result = GroupElement::identity(self.rank);
        for &letter in g.word().letters() {
            result = result.multiply(&self.images[letter - 1])?;
        }
        for (k, z) in g.shift().coords().iter().enumerate() {
            if !z.is_zero() {
                let exponent = BigInt::from(2) * z;
                result = result.multiply(&self.images[k].power(&exponent))?;
            }
        }
        Ok(result)
    }

    /// Composition `self . other`, so `other` acts first.
    pub fn compose(&self, other: &GEndomorphism) -> Result<GEndomorphism> {
        check_ranks(self.rank, other.rank)?;
        let images = other
            .images
            .iter()
            .map(|image| self.apply(image))
            .collect::<Result<Vec<_>>>()?;
        Ok(GEndomorphism {
            rank: self.rank,
            images,
        })
    }

    /// The induced automorphism of the quotient `W_n`; meaningful when
    /// the map is an automorphism of `G_n`.
    pub fn induced_w(&self) -> Result<WAutomorphism> {
        WAutomorphism::from_images(self.images.iter().map(|g| g.project_w().clone()).collect())
    }

    /// The induced matrix on the lattice: row `i` is the exponent
    /// vector of the image of the square of generator `i`. Fails if
    /// some image of a square leaves the lattice, which cannot happen
    /// for automorphisms.
    pub fn induced_matrix(&self) -> Result<IntMatrix> {
        let n = self.rank;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 1..=n {
            let image = self.apply(&embed_a(LatticeVector::unit(n, i)?))?;
            if !image.word().is_empty() {
                return Err(Error::ImageNotInLattice { index: i });
            }
            rows.push(image.shift().coords().to_vec());
        }
        IntMatrix::from_rows(rows)
    }

    /// Recovers the translation matrix when the map is a translation
    /// endomorphism, i.e. when the induced map on `W_n` is the
    /// identity; otherwise `None`.
    pub fn translation_part(&self) -> Option<TranslationMatrix> {
        let n = self.rank;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for (k, image) in self.images.iter().enumerate() {
            if image.word().letters() != [k + 1] {
                return None;
            }
            rows.push(image.shift().coords().to_vec());
        }
        Some(TranslationMatrix::from_rows(rows).expect("square by construction"))
    }

    /// Searches the normal-form ball for a conjugation witness: the
    /// first `g` in canonical order with `inner(g)` equal to the map.
    pub fn inner_witness(
        &self,
        max_len: usize,
        box_bound: usize,
    ) -> Result<Option<GroupElement>> {
        self.inner_witness_capped(max_len, box_bound, DEFAULT_BALL_CAP)
    }

    pub fn inner_witness_capped(
        &self,
        max_len: usize,
        box_bound: usize,
        cap: u64,
    ) -> Result<Option<GroupElement>> {
        let n = self.rank;
        for candidate in enumerate_ball_capped(n, max_len, box_bound, cap)? {
            let matches = (1..=n).all(|i| {
                let conjugated = GroupElement::generator(n, i)
                    .expect("index in range")
                    .conjugate(&candidate)
                    .expect("ranks agree");
                conjugated == *self.image(i)
            });
            if matches {
                return Ok(Some(candidate));
            }
        }
        Ok(None)
    }
}

fn check_pair(rank: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i > rank {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank,
        });
    }
    if j == 0 || j > rank {
        return Err(Error::IndexOutOfRange {
            index: j,
            rank,
        });
    }
    if i == j {
        return Err(Error::IndicesMustDiffer { index: i });
    }
    Ok(())
}

/// One token of a formal word in the named generators of the
/// automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutoToken {
    /// Permutation lift.
    Perm(Permutation),
    /// Fouxe-Rabinovitch lift conjugating generator `i` by `j`.
    Fr { i: usize, j: usize },
    /// Power of the elementary translation at `(i, j)`.
    Eps {
        i: usize,
        j: usize,
        exponent: BigInt,
    },
    /// Sign flip of generator `i`.
    Delta { i: usize },
    /// A general translation; must be a unit to evaluate.
    Trans(TranslationMatrix),
}

/// A token with its formal inverse flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoLetter {
    pub token: AutoToken,
    pub inverse: bool,
}

impl AutoLetter {
    pub fn new(token: AutoToken) -> Self {
        AutoLetter {
            token,
            inverse: false,
        }
    }

    pub fn inverted(token: AutoToken) -> Self {
        AutoLetter {
            token,
            inverse: true,
        }
    }
}

/// A formal word in the named automorphism generators, evaluated with
/// the rightmost letter acting first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoWord {
    rank: usize,
    letters: Vec<AutoLetter>,
}

impl AutoWord {
    pub fn new(rank: usize, letters: Vec<AutoLetter>) -> Result<Self> {
        for letter in &letters {
            match &letter.token {
                AutoToken::Perm(sigma) => check_ranks(rank, sigma.degree())?,
                AutoToken::Fr { i, j } => check_pair(rank, *i, *j)?,
                AutoToken::Eps { i, j, .. } => check_pair(rank, *i, *j)?,
                AutoToken::Delta { i } => {
                    if *i == 0 || *i > rank {
                        return Err(Error::IndexOutOfRange { index: *i, rank });
                    }
                }
                AutoToken::Trans(matrix) => check_ranks(rank, matrix.size())?,
            }
        }
        Ok(AutoWord { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[AutoLetter] {
        &self.letters
    }

    /// Evaluates the word to an automorphism. Translation tokens must
    /// be units of the monoid.
    pub fn evaluate(&self) -> Result<GEndomorphism> {
        let mut result = GEndomorphism::identity(self.rank);
        for letter in &self.letters {
            result = result.compose(&letter_endomorphism(self.rank, letter)?)?;
        }
        Ok(result)
    }

    /// The formal inverse: letters reversed, inverse flags flipped.
    /// Evaluating the word composed with its inverse gives the
    /// identity, which certifies evaluations as automorphisms.
    pub fn inverse(&self) -> AutoWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|letter| AutoLetter {
                token: letter.token.clone(),
                inverse: !letter.inverse,
            })
            .collect();
        AutoWord {
            rank: self.rank,
            letters,
        }
    }
}

fn letter_endomorphism(rank: usize, letter: &AutoLetter) -> Result<GEndomorphism> {
    match &letter.token {
        AutoToken::Perm(sigma) => Ok(GEndomorphism::permutation(&if letter.inverse {
            sigma.inverse()
        } else {
            sigma.clone()
        })),
        AutoToken::Fr { i, j } => {
            let fr = GEndomorphism::fouxe_rabinovitch(rank, *i, *j)?;
            if letter.inverse {
                // The square of the lift is the translation by -2 eps,
                // so the inverse is the lift followed by +2 eps.
                let correction = GEndomorphism::eps_pow(rank, *i, *j, &BigInt::from(2))?;
                fr.compose(&correction)
            } else {
                Ok(fr)
            }
        }
        AutoToken::Eps { i, j, exponent } => {
            let k = if letter.inverse {
                -exponent.clone()
            } else {
                exponent.clone()
            };
            GEndomorphism::eps_pow(rank, *i, *j, &k)
        }
        AutoToken::Delta { i } => GEndomorphism::delta(rank, *i),
        AutoToken::Trans(matrix) => {
            if !matrix.is_unit() {
                let bad = (0..matrix.size())
                    .find(|&k| {
                        let d = matrix.entry(k, k);
                        !d.is_zero() && *d != -BigInt::one()
                    })
                    .expect("non-unit has an offending entry");
                return Err(Error::NotAUnit {
                    index: bad + 1,
                    entry: matrix.entry(bad, bad).clone(),
                });
            }
            let value = if letter.inverse {
                matrix.unit_inverse()?
            } else {
                matrix.clone()
            };
            Ok(value.to_endomorphism())
        }
    }
}

impl fmt::Display for AutoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, letter) in self.letters.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            match &letter.token {
                AutoToken::Perm(sigma) => write!(f, "p{sigma}")?,
                AutoToken::Fr { i, j } => write!(f, "a[{i},{j}]")?,
                AutoToken::Eps { i, j, exponent } => {
                    write!(f, "e[{i},{j}]")?;
                    if !exponent.is_one() {
                        write!(f, "^{exponent}")?;
                    }
                }
                AutoToken::Delta { i } => write!(f, "d[{i}]")?,
                AutoToken::Trans(matrix) => write!(f, "t{matrix}")?,
            }
            if letter.inverse {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

/// A semi-linear pair: a lattice automorphism together with a
/// compatible automorphism of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiLinearPair {
    pub matrix: IntMatrix,
    pub w_map: WAutomorphism,
}

/// Checks semi-linearity on generators: `f . rho(x_k) = rho(F(x_k)) . f`
/// for every `k`. The matrix must be invertible over the integers.
pub fn is_semilinear(f: &IntMatrix, w_map: &WAutomorphism) -> Result<bool> {
    let n = w_map.rank();
    if f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch {
            left: (f.rows(), f.cols()),
            right: (n, n),
        });
    }
    if !f.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    for k in 1..=n {
        let generator = ReducedWord::generator(n, k)?;
        let left = f.mul(&rho_word(&generator))?;
        let right = rho_word(w_map.image(k)).mul(f)?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pair induced by an automorphism of `G_n`: its lattice action and
/// its quotient automorphism. The induced matrix stores images as rows;
/// the pair carries the transpose, the same map in the column
/// convention used by [`is_semilinear`].
pub fn induced_pair(phi: &GEndomorphism) -> Result<SemiLinearPair> {
    Ok(SemiLinearPair {
        matrix: phi.induced_matrix()?.transpose(),
        w_map: phi.induced_w()?,
    })
}

/// The section of the symmetric group: a permutation maps to its
/// permutation matrix paired with the permutation automorphism of the
/// quotient.
pub fn sn_section(sigma: &Permutation) -> SemiLinearPair {
    let n = sigma.degree();
    let matrix = IntMatrix::from_fn(n, n, |r, c| {
        if r + 1 == sigma.apply(c + 1) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    SemiLinearPair {
        matrix,
        w_map: WAutomorphism::permutation(sigma),
    }
}
