//! Exact normal-form arithmetic in the combinatorial Hantzsche-Wendt
//! group `G_n`, presented on generators `x_1, ..., x_n` with relators
//! `x_i^-1 x_j^2 x_i x_j^2` for all `i != j`.
//!
//! Every element has a unique normal form `w * a`: a reduced word `w`
//! in the generators followed by an element `a` of the lattice spanned
//! by the squares of the generators. The lattice part always sits on
//! the right of the word.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::word::{check_ranks, ReducedWord};

/// Sign of a generator letter when folding it into a normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A group element in normal form: `x_{i1} ... x_{ik} * (x_1^2)^{z_1}
/// ... (x_n^2)^{z_n}`, stored as the reduced word and the exponent
/// vector. Two elements are equal in the group exactly when the fields
/// agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    word: ReducedWord,
    shift: LatticeVector,
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        GroupElement {
            word: ReducedWord::identity(rank),
            shift: LatticeVector::zero(rank),
        }
    }

    /// The generator `x_i`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Ok(GroupElement {
            word: ReducedWord::generator(rank, i)?,
            shift: LatticeVector::zero(rank),
        })
    }

    pub fn from_parts(word: ReducedWord, shift: LatticeVector) -> Result<Self> {
        check_ranks(word.rank(), shift.rank())?;
        Ok(GroupElement { word, shift })
    }

    pub fn rank(&self) -> usize {
        self.word.rank()
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn shift(&self) -> &LatticeVector {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty() && self.shift.is_zero()
    }

    /// Image under the quotient map to the free product `W_n`.
    pub fn project_w(&self) -> &ReducedWord {
        &self.word
    }

    /// Multiplies by `x_i` (or `x_i^-1`) on the right, restoring the
    /// normal form.
    ///
    /// Moving `x_i` left through the lattice part twists the exponent
    /// vector by the action of `i`; if the word then ends in `i` the two
    /// letters merge into `x_i^2`, which joins the lattice part. The
    /// inverse letter uses `x_i^-1 = x_i * (x_i^2)^-1`.
    pub fn append_letter(&self, i: usize, sign: Sign) -> Result<GroupElement> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        let mut result = self.clone();
        result.push_letter(i);
        if matches!(sign, Sign::Minus) {
            result.shift.add_at(i, -1);
        }
        Ok(result)
    }

    fn push_letter(&mut self, i: usize) {
        self.shift.negate_except(i);
        if self.word.push_letter(i) {
            self.shift.add_at(i, 1);
        }
    }

    /// Product of two normal forms, folding the right factor's letters
    /// into the left and then merging the lattice parts.
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        check_ranks(self.rank(), other.rank())?;
        let mut result = self.clone();
        for &letter in other.word.letters() {
            result.push_letter(letter);
        }
        result.shift = result.shift.add(&other.shift)?;
        Ok(result)
    }

    pub fn invert(&self) -> GroupElement {
        let mut result = embed_a(self.shift.neg());
        for &letter in self.word.letters().iter().rev() {
            result.push_letter(letter);
            result.shift.add_at(letter, -1);
        }
        result
    }

    /// Conjugate `by * self * by^-1`.
    pub fn conjugate(&self, by: &GroupElement) -> Result<GroupElement> {
        by.multiply(self)?.multiply(&by.invert())
    }

    /// Integer power by square-and-multiply; negative exponents invert
    /// the base first.
    pub fn power(&self, k: &BigInt) -> GroupElement {
        let base = if k.is_negative() {
            self.invert()
        } else {
            self.clone()
        };
        let mut result = GroupElement::identity(self.rank());
        let magnitude = k.magnitude();
        let bits = magnitude.bits();
        for bit in (0..bits).rev() {
            result = result.multiply(&result).expect("ranks agree");
            if magnitude.bit(bit) {
                result = result.multiply(&base).expect("ranks agree");
            }
        }
        result
    }
}

impl fmt::Display for GroupElement {
    /// Canonical form `x{i1} x{i2} ... ; [z1,...,zn]`; the empty word
    /// leaves only the `;` prefix.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &letter in self.word.letters() {
            write!(f, "x{letter} ")?;
        }
        write!(f, "; {}", self.shift)
    }
}

/// Embeds a lattice vector as the group element with empty word part.
pub fn embed_a(shift: LatticeVector) -> GroupElement {
    GroupElement {
        word: ReducedWord::identity(shift.rank()),
        shift,
    }
}

/// The lattice part of `(x_i * a)^2`, namely `(2 a_i + 1) e_i`.
pub fn square_shifted(i: usize, a: &LatticeVector) -> Result<LatticeVector> {
    let rank = a.rank();
    if i == 0 || i > rank {
        return Err(Error::IndexOutOfRange { index: i, rank });
    }
    let coefficient = BigInt::from(2) * a.coord(i) + 1;
    Ok(LatticeVector::unit(rank, i)?.scaled(&coefficient))
}

/// Default cap on ball enumeration size.
pub const DEFAULT_BALL_CAP: u64 = 5_000_000;

/// Number of normal forms with word length at most `max_len` and every
/// shift coordinate bounded by `box_bound` in absolute value.
pub fn ball_count(n: usize, max_len: usize, box_bound: usize) -> BigInt {
    let mut words = BigInt::from(1);
    if n >= 1 {
        let mut of_length = BigInt::from(n as u64);
        for _ in 1..=max_len {
            words += &of_length;
            of_length *= (n - 1) as u64;
            if n == 1 {
                break;
            }
        }
    }
    let shifts = BigInt::from(2 * box_bound as u64 + 1).pow(n as u32);
    words * shifts
}

/// Enumerates all normal forms with `|word| <= max_len` and every shift
/// coordinate in `[-box_bound, box_bound]`, each exactly once, ordered
/// by word length, then letters lexicographically, then shift
/// lexicographically.
pub fn enumerate_ball(n: usize, max_len: usize, box_bound: usize) -> Result<Ball> {
    enumerate_ball_capped(n, max_len, box_bound, DEFAULT_BALL_CAP)
}

pub fn enumerate_ball_capped(
    n: usize,
    max_len: usize,
    box_bound: usize,
    cap: u64,
) -> Result<Ball> {
    let count = ball_count(n, max_len, box_bound);
    if count > BigInt::from(cap) {
        return Err(Error::BallTooLarge { count, cap });
    }
    let mut words: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &layer {
            for letter in 1..=n {
                if prefix.last() != Some(&letter) {
                    let mut extended = prefix.clone();
                    extended.push(letter);
                    next.push(extended);
                }
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    Ok(Ball {
        n,
        box_bound: box_bound as i64,
        words,
        word_index: 0,
        shift: alloc::vec![-(box_bound as i64); n],
    })
}

/// Iterator over a normal-form ball; see [`enumerate_ball`].
pub struct Ball {
    n: usize,
    box_bound: i64,
    words: Vec<Vec<usize>>,
    word_index: usize,
    shift: Vec<i64>,
}

impl Iterator for Ball {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        if self.word_index >= self.words.len() {
            return None;
        }
        let element = GroupElement {
            word: ReducedWord::from_reduced_unchecked(
                self.n,
                self.words[self.word_index].clone(),
            ),
            shift: LatticeVector::from_i64(&self.shift),
        };
        // Advance the shift odometer lexicographically; on wrap, move to
        // the next word.
        let mut pos = self.n;
        loop {
            if pos == 0 {
                self.word_index += 1;
                self.shift.fill(-self.box_bound);
                break;
            }
            pos -= 1;
            if self.shift[pos] < self.box_bound {
                self.shift[pos] += 1;
                for later in pos + 1..self.n {
                    self.shift[later] = -self.box_bound;
                }
                break;
            }
        }
        Some(element)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::act;
    use num_traits::Zero;

    fn gen(n: usize, i: usize) -> GroupElement {
        GroupElement::generator(n, i).unwrap()
    }

    fn shift_of(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    #[test]
    fn squares_generate_the_lattice() {
        let mut g = GroupElement::identity(2);
        g = g.append_letter(1, Sign::Plus).unwrap();
        g = g.append_letter(1, Sign::Plus).unwrap();
        assert!(g.word().is_empty());
        assert_eq!(g.shift(), &shift_of(&[1, 0]));
    }

    #[test]
    fn append_folds_across_the_word() {
        // x1 x2 * x2 x1 = x1 x2^2 x1 = x1^2 x2^-2.
        let start = GroupElement::from_parts(
            ReducedWord::from_letters(2, [1, 2]).unwrap(),
            LatticeVector::zero(2),
        )
        .unwrap();
        let mid = start.append_letter(2, Sign::Plus).unwrap();
        assert_eq!(mid.word().letters(), [1]);
        assert_eq!(mid.shift(), &shift_of(&[0, 1]));
        let done = mid.append_letter(1, Sign::Plus).unwrap();
        assert!(done.word().is_empty());
        assert_eq!(done.shift(), &shift_of(&[1, -1]));
    }

    #[test]
    fn inverse_letter() {
        let g = GroupElement::identity(2)
            .append_letter(2, Sign::Minus)
            .unwrap();
        assert_eq!(g.word().letters(), [2]);
        assert_eq!(g.shift(), &shift_of(&[0, -1]));
        // Oracle: g * g^-1 = 1.
        assert!(g.multiply(&g.invert()).unwrap().is_identity());
        assert_eq!(g.invert().word().letters(), [2]);
        assert!(g.invert().shift().is_zero());
    }

    #[test]
    fn defining_relators_vanish() {
        for n in 2..=6 {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    // x_i^-1 x_j^2 x_i x_j^2
                    let value = GroupElement::identity(n)
                        .append_letter(i, Sign::Minus)
                        .unwrap()
                        .append_letter(j, Sign::Plus)
                        .unwrap()
                        .append_letter(j, Sign::Plus)
                        .unwrap()
                        .append_letter(i, Sign::Plus)
                        .unwrap()
                        .append_letter(j, Sign::Plus)
                        .unwrap()
                        .append_letter(j, Sign::Plus)
                        .unwrap();
                    assert!(value.is_identity(), "relator i={i} j={j} n={n}");
                }
            }
        }
    }

    #[test]
    fn square_of_shifted_generator() {
        // (x_1 * a)^2 = (x_1^2)^(2 a_1 + 1) with a = 2 e_1 + e_2.
        let a = shift_of(&[2, 1]);
        let g = gen(2, 1).multiply(&embed_a(a.clone())).unwrap();
        let squared = g.power(&BigInt::from(2));
        assert!(squared.word().is_empty());
        assert_eq!(squared.shift(), &shift_of(&[5, 0]));
        assert_eq!(square_shifted(1, &a).unwrap(), shift_of(&[5, 0]));

        // (x_2 x_2^-2)^2 = x_2^-2.
        let a = shift_of(&[0, -1]);
        assert_eq!(square_shifted(2, &a).unwrap(), shift_of(&[0, -1]));
        let g = gen(2, 2).multiply(&embed_a(a)).unwrap();
        assert_eq!(g.power(&BigInt::from(2)).shift(), &shift_of(&[0, -1]));

        // a = 0 gives the plain square.
        assert_eq!(
            square_shifted(1, &LatticeVector::zero(2)).unwrap(),
            shift_of(&[1, 0])
        );
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let g = GroupElement::from_parts(
            ReducedWord::from_letters(3, [1, 2]).unwrap(),
            shift_of(&[1, -2, 0]),
        )
        .unwrap();
        let h = GroupElement::from_parts(
            ReducedWord::from_letters(3, [2, 3]).unwrap(),
            shift_of(&[0, 1, 1]),
        )
        .unwrap();
        assert_eq!(g.project_w().letters(), [1, 2]);
        let product = g.multiply(&h).unwrap();
        assert_eq!(
            product.project_w(),
            &g.project_w().multiply(h.project_w()).unwrap()
        );
        assert_eq!(embed_a(shift_of(&[1, 0, 0])).word().letters(), [] as [usize; 0]);
    }

    #[test]
    fn block_multiplication_oracle() {
        // When no cancellation occurs, the product is the concatenated
        // word with the left shift twisted by the right word's signs.
        let g = GroupElement::from_parts(
            ReducedWord::from_letters(3, [1, 2]).unwrap(),
            shift_of(&[1, -1, 2]),
        )
        .unwrap();
        let h = GroupElement::from_parts(
            ReducedWord::from_letters(3, [1, 3]).unwrap(),
            shift_of(&[1, 1, 1]),
        )
        .unwrap();
        let product = g.multiply(&h).unwrap();
        let twisted = act(h.word(), g.shift()).unwrap();
        assert_eq!(product.word().letters(), [1, 2, 1, 3]);
        assert_eq!(product.shift(), &twisted.add(h.shift()).unwrap());
    }

    #[test]
    fn powers() {
        let g = gen(3, 1);
        assert_eq!(g.power(&BigInt::from(2)), embed_a(shift_of(&[1, 0, 0])));
        assert_eq!(g.power(&BigInt::from(-1)), g.invert());
        assert!(g.power(&BigInt::zero()).is_identity());
        let h = gen(3, 1).multiply(&gen(3, 2)).unwrap();
        assert_eq!(h.power(&BigInt::from(3)).word().letters(), [1, 2, 1, 2, 1, 2]);
    }

    #[test]
    fn conjugation() {
        // Conjugation by x_1^2 sends x_2 to x_2 x_1^-4.
        let by = embed_a(shift_of(&[1, 0, 0]));
        let conjugated = gen(3, 2).conjugate(&by).unwrap();
        assert_eq!(conjugated.word().letters(), [2]);
        assert_eq!(conjugated.shift(), &shift_of(&[-2, 0, 0]));
    }

    #[test]
    fn ball_counts() {
        assert_eq!(ball_count(3, 0, 0), BigInt::from(1));
        assert_eq!(ball_count(3, 1, 0), BigInt::from(4));
        assert_eq!(ball_count(2, 2, 1), BigInt::from(45));
        assert_eq!(
            enumerate_ball(2, 2, 1).unwrap().count(),
            45,
        );
        assert_eq!(enumerate_ball(3, 1, 0).unwrap().count(), 4);
        assert_eq!(enumerate_ball(3, 0, 0).unwrap().count(), 1);
    }

    #[test]
    fn ball_is_deduplicated_and_ordered() {
        let elements: Vec<GroupElement> = enumerate_ball(3, 2, 1).unwrap().collect();
        let mut seen = elements.clone();
        seen.dedup();
        assert_eq!(seen.len(), elements.len());
        // Canonical order: word length first.
        let lengths: Vec<usize> = elements.iter().map(|g| g.word().len()).collect();
        let mut sorted = lengths.clone();
        sorted.sort_unstable();
        assert_eq!(lengths, sorted);
    }

    #[test]
    fn ball_cap_guard() {
        assert!(matches!(
            enumerate_ball_capped(3, 2, 1, 10),
            Err(Error::BallTooLarge { .. })
        ));
    }

    #[test]
    fn canonical_display() {
        assert_eq!(GroupElement::identity(2).to_string(), "; [0,0]");
        let g = GroupElement::from_parts(
            ReducedWord::from_letters(2, [1, 2]).unwrap(),
            shift_of(&[3, -1]),
        )
        .unwrap();
        assert_eq!(g.to_string(), "x1 x2 ; [3,-1]");
    }

    #[test]
    fn torsion_free_spot_check() {
        // No nontrivial element of a small ball has a power equal to the
        // identity.
        for g in enumerate_ball(3, 2, 1).unwrap() {
            if g.is_identity() {
                continue;
            }
            let mut power = g.clone();
            for _ in 2..=6 {
                power = power.multiply(&g).unwrap();
                assert!(!power.is_identity());
            }
        }
    }
}
