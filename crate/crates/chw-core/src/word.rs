//! Words in the free product `W_n = C2 * ... * C2` of `n` groups of
//! order two, and the automorphisms of `W_n` generated by permutation
//! and Fouxe-Rabinovitch automorphisms.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A reduced word in the `n` involutive generators of `W_n`.
///
/// Letters are generator indices in `1..=rank`. Since every generator
/// is an involution there are no inverse letters, and a word is reduced
/// exactly when no two adjacent letters are equal. Reduced words are
/// unique normal forms for the elements of `W_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    rank: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    /// The empty word.
    pub fn identity(rank: usize) -> Self {
        ReducedWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The one-letter word for generator `i`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        check_index(rank, i)?;
        Ok(ReducedWord {
            rank,
            letters: alloc::vec![i],
        })
    }

    /// Builds a word from an arbitrary letter sequence, freely reducing
    /// adjacent equal letters. Reduction with involutive generators is
    /// confluent, so the result does not depend on cancellation order.
    pub fn from_letters<I>(rank: usize, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut reduced: Vec<usize> = Vec::new();
        for letter in letters {
            check_index(rank, letter)?;
            if reduced.last() == Some(&letter) {
                reduced.pop();
            } else {
                reduced.push(letter);
            }
        }
        Ok(ReducedWord {
            rank,
            letters: reduced,
        })
    }

    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l <= rank));
        debug_assert!(letters.windows(2).all(|w| w[0] != w[1]));
        ReducedWord { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Pushes one letter on the right, cancelling if it repeats the last
    /// letter. Returns `true` when a cancellation happened.
    pub(crate) fn push_letter(&mut self, letter: usize) -> bool {
        debug_assert!(letter >= 1 && letter <= self.rank);
        if self.letters.last() == Some(&letter) {
            self.letters.pop();
            true
        } else {
            self.letters.push(letter);
            false
        }
    }

    /// Product in `W_n`: concatenation followed by free reduction.
    pub fn multiply(&self, other: &ReducedWord) -> Result<ReducedWord> {
        check_ranks(self.rank, other.rank)?;
        let mut result = self.clone();
        for &letter in &other.letters {
            result.push_letter(letter);
        }
        Ok(result)
    }

    /// The inverse of a word is its reverse, since each letter is an
    /// involution.
    pub fn inverse(&self) -> ReducedWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        ReducedWord {
            rank: self.rank,
            letters,
        }
    }

    /// Sign vector of the diagonal action on the lattice: component `j`
    /// is `(-1)^(number of letters different from j)`.
    pub fn sign_vector(&self) -> Vec<i8> {
        let total = self.letters.len();
        let mut counts = alloc::vec![0usize; self.rank];
        for &letter in &self.letters {
            counts[letter - 1] += 1;
        }
        counts
            .iter()
            .map(|&c| if (total - c).is_multiple_of(2) { 1 } else { -1 })
            .collect()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (pos, letter) in self.letters.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{letter}")?;
        }
        Ok(())
    }
}

fn check_index(rank: usize, i: usize) -> Result<()> {
    if i == 0 || i > rank {
        Err(Error::IndexOutOfRange { index: i, rank })
    } else {
        Ok(())
    }
}

pub(crate) fn check_ranks(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(Error::RankMismatch { left, right })
    } else {
        Ok(())
    }
}

/// A permutation of `1..=n`, stored as the list of images of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image list; `images[k]` is the
    /// image of `k + 1`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &value in &images {
            if value == 0 || value > n || seen[value - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[value - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        check_index(n, i)?;
        check_index(n, j)?;
        if i == j {
            return Err(Error::IndicesMustDiffer { index: i });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    /// The n-cycle `(1 2 ... n)`.
    pub fn full_cycle(n: usize) -> Self {
        let images = (1..=n).map(|k| if k == n { 1 } else { k + 1 }).collect();
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i` under the permutation (`i` is 1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Composition `self . other`, so `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_ranks(self.degree(), other.degree())?;
        let images = other.images.iter().map(|&k| self.images[k - 1]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.degree();
        let mut images = alloc::vec![0usize; n];
        for (k, &value) in self.images.iter().enumerate() {
            images[value - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// All permutations of `1..=n` in lexicographic order of their
    /// image lists. Intended for exhaustive sweeps at small `n`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut result = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            result.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                break;
            }
        }
        result
    }

    /// Adjacent transpositions together with the full cycle; a standard
    /// generating set used when exhausting `S_n` is too expensive.
    pub fn generating_set(n: usize) -> Vec<Permutation> {
        let mut result: Vec<Permutation> = (1..n)
            .map(|i| Permutation::transposition(n, i, i + 1).expect("adjacent indices differ"))
            .collect();
        if n > 2 {
            result.push(Permutation::full_cycle(n));
        }
        result
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, value) in self.images.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{value}")?;
        }
        write!(f, "]")
    }
}

fn next_permutation(values: &mut [usize]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// An automorphism of `W_n`, stored as the images of the generators.
///
/// Values are only built from the named generators (permutation and
/// Fouxe-Rabinovitch automorphisms) and their compositions, so every
/// stored image tuple genuinely defines an automorphism. Equality of
/// image tuples decides equality of the maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WAutomorphism {
    rank: usize,
    images: Vec<ReducedWord>,
}

impl WAutomorphism {
    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank)
            .map(|i| ReducedWord::from_reduced_unchecked(rank, alloc::vec![i]))
            .collect();
        WAutomorphism { rank, images }
    }

    /// The permutation automorphism sending generator `i` to generator
    /// `sigma(i)`.
    pub fn permutation(sigma: &Permutation) -> Self {
        let rank = sigma.degree();
        let images = (1..=rank)
            .map(|i| ReducedWord::from_reduced_unchecked(rank, alloc::vec![sigma.apply(i)]))
            .collect();
        WAutomorphism { rank, images }
    }

    /// The Fouxe-Rabinovitch automorphism conjugating generator `i` by
    /// generator `j` and fixing all other generators.
    pub fn fouxe_rabinovitch(rank: usize, i: usize, j: usize) -> Result<Self> {
        check_index(rank, i)?;
        check_index(rank, j)?;
        if i == j {
            return Err(Error::IndicesMustDiffer { index: i });
        }
        let images = (1..=rank)
            .map(|k| {
                if k == i {
                    ReducedWord::from_reduced_unchecked(rank, alloc::vec![j, i, j])
                } else {
                    ReducedWord::from_reduced_unchecked(rank, alloc::vec![k])
                }
            })
            .collect();
        Ok(WAutomorphism { rank, images })
    }

    /// Builds a map from generator images, checking that each image is
    /// an involution. The caller is responsible for the images actually
    /// defining an automorphism.
    pub fn from_images(images: Vec<ReducedWord>) -> Result<Self> {
        let rank = images.len();
        for image in &images {
            check_ranks(rank, image.rank())?;
            if !image.multiply(image)?.is_empty() {
                return Err(Error::NotInvolution);
            }
        }
        Ok(WAutomorphism { rank, images })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[ReducedWord] {
        &self.images
    }

    /// Image of generator `i` (1-based).
    pub fn image(&self, i: usize) -> &ReducedWord {
        &self.images[i - 1]
    }

    /// Applies the map by letterwise substitution followed by free
    /// reduction.
    pub fn apply(&self, word: &ReducedWord) -> Result<ReducedWord> {
        check_ranks(self.rank, word.rank())?;
        let mut result = ReducedWord::identity(self.rank);
        for &letter in word.letters() {
            for &image_letter in self.images[letter - 1].letters() {
                result.push_letter(image_letter);
            }
        }
        Ok(result)
    }

    /// Composition `self . other`, so `other` acts first.
    pub fn compose(&self, other: &WAutomorphism) -> Result<WAutomorphism> {
        check_ranks(self.rank, other.rank)?;
        let images = other
            .images
            .iter()
            .map(|image| self.apply(image))
            .collect::<Result<Vec<_>>>()?;
        Ok(WAutomorphism {
            rank: self.rank,
            images,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, image)| image.letters() == [k + 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(rank: usize, letters: &[usize]) -> ReducedWord {
        ReducedWord::from_letters(rank, letters.iter().copied()).unwrap()
    }

    #[test]
    fn multiplication_reduces() {
        // Full cancellation.
        let left = word(3, &[1, 2]);
        let right = word(3, &[2, 1]);
        assert!(left.multiply(&right).unwrap().is_empty());
        // Single cancellation.
        let right = word(3, &[2, 3]);
        assert_eq!(left.multiply(&right).unwrap(), word(3, &[1, 3]));
        // Images of Fouxe-Rabinovitch generators are involutions.
        let conj = word(3, &[2, 1, 2]);
        assert!(conj.multiply(&conj).unwrap().is_empty());
    }

    #[test]
    fn inverse_is_reverse() {
        let w = word(4, &[1, 2, 3, 1]);
        assert_eq!(w.inverse(), word(4, &[1, 3, 2, 1]));
        assert!(w.multiply(&w.inverse()).unwrap().is_empty());
        assert!(w.inverse().multiply(&w).unwrap().is_empty());
    }

    #[test]
    fn rank_mismatch_rejected() {
        let left = word(3, &[1]);
        let right = word(4, &[1]);
        assert!(matches!(
            left.multiply(&right),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn letters_out_of_range_rejected() {
        assert!(matches!(
            ReducedWord::from_letters(3, [4]),
            Err(Error::IndexOutOfRange { index: 4, rank: 3 })
        ));
        assert!(ReducedWord::from_letters(3, [0]).is_err());
    }

    #[test]
    fn sign_vectors() {
        assert_eq!(word(3, &[]).sign_vector(), [1, 1, 1]);
        assert_eq!(word(3, &[1]).sign_vector(), [1, -1, -1]);
        // Product of the two diagonal matrices for letters 1 and 2.
        assert_eq!(word(3, &[1, 2]).sign_vector(), [-1, -1, 1]);
    }

    #[test]
    fn sign_vector_is_multiplicative() {
        let a = word(4, &[1, 2, 3]);
        let b = word(4, &[3, 2, 4, 1]);
        let product = a.multiply(&b).unwrap();
        let expected: Vec<i8> = a
            .sign_vector()
            .iter()
            .zip(b.sign_vector())
            .map(|(x, y)| x * y)
            .collect();
        assert_eq!(product.sign_vector(), expected);
    }

    #[test]
    fn named_generators() {
        let swap = Permutation::from_images(alloc::vec![2, 1]).unwrap();
        let alpha = WAutomorphism::permutation(&swap);
        assert_eq!(alpha.image(1), &word(2, &[2]));
        assert_eq!(alpha.image(2), &word(2, &[1]));

        let fr = WAutomorphism::fouxe_rabinovitch(3, 1, 2).unwrap();
        assert_eq!(fr.image(1), &word(3, &[2, 1, 2]));
        assert_eq!(fr.image(2), &word(3, &[2]));
        assert_eq!(fr.image(3), &word(3, &[3]));

        assert!(WAutomorphism::identity(4).is_identity());
        assert!(matches!(
            WAutomorphism::fouxe_rabinovitch(3, 2, 2),
            Err(Error::IndicesMustDiffer { index: 2 })
        ));
    }

    #[test]
    fn apply_and_compose() {
        let fr = WAutomorphism::fouxe_rabinovitch(3, 1, 2).unwrap();
        assert_eq!(fr.apply(&word(3, &[1])).unwrap(), word(3, &[2, 1, 2]));
        assert!(fr.compose(&fr).unwrap().is_identity());

        let swap = Permutation::from_images(alloc::vec![2, 1, 3]).unwrap();
        let alpha = WAutomorphism::permutation(&swap);
        assert_eq!(
            alpha.apply(&word(3, &[1, 2, 1])).unwrap(),
            word(3, &[2, 1, 2])
        );
    }

    #[test]
    fn permutation_composition_matches_action() {
        let sigma = Permutation::from_images(alloc::vec![2, 3, 1]).unwrap();
        let tau = Permutation::from_images(alloc::vec![2, 1, 3]).unwrap();
        let st = sigma.compose(&tau).unwrap();
        for i in 1..=3 {
            assert_eq!(st.apply(i), sigma.apply(tau.apply(i)));
        }
        assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(4).len(), 24);
        let gens = Permutation::generating_set(5);
        assert_eq!(gens.len(), 5);
    }

    #[test]
    fn invalid_permutations_rejected() {
        assert!(Permutation::from_images(alloc::vec![1, 1]).is_err());
        assert!(Permutation::from_images(alloc::vec![0, 2]).is_err());
        assert!(Permutation::from_images(alloc::vec![3, 1]).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(word(3, &[2, 1, 2]).to_string(), "x2 x1 x2");
        assert_eq!(word(3, &[]).to_string(), "1");
    }
}
