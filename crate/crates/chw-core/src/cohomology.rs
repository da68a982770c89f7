//! Cohomology of the quotient acting on the lattice.
//!
//! The second cohomology group decomposes as a direct sum over the
//! order-two subgroups generated by the images of the generators, and
//! each summand is the quotient of fixed points modulo norms for one
//! diagonal involution. A class is therefore a vector of `n` bits,
//! bit `i` being the restriction to the subgroup generated by the
//! `i`-th generator. The first cohomology group is the cokernel of the
//! lattice embedding into the zero-diagonal translations.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{
    cokernel_invariants, express_in_basis, kernel_basis, rho, smith_normal_form, solve,
    IntMatrix, LatticeVector,
};
use crate::monoid::iota;

/// An element of the second cohomology group in coordinates: one bit
/// per conjugacy class of order-two subgroups, represented by the
/// subgroups generated by the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    bits: Vec<bool>,
}

impl CohClass {
    pub fn new(bits: Vec<bool>) -> Self {
        CohClass { bits }
    }

    pub fn rank(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Restriction to the subgroup generated by generator `i`
    /// (1-based); `true` means the restriction is nontrivial.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    /// The extension defined by the class is torsion-free exactly when
    /// the restriction to every finite subgroup is nonzero, i.e. every
    /// coordinate is set.
    pub fn is_torsion_free(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (pos, &bit) in self.bits.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if bit { 1 } else { 0 })?;
        }
        write!(f, ")")
    }
}

/// Cohomology of a cyclic group of order two acting by an integer
/// involution: the invariant factors of fixed points modulo norms,
/// `ker(sigma - 1) / im(sigma + 1)`.
pub fn h2_cyclic(sigma: &IntMatrix) -> Result<Vec<BigInt>> {
    if !sigma.is_square() || !sigma.mul(sigma)?.is_identity() {
        return Err(Error::NotInvolution);
    }
    let n = sigma.rows();
    let identity = IntMatrix::identity(n);
    let fixed = kernel_basis(&sigma.sub(&identity)?);
    let norms = sigma.add(&identity)?;

    // Express the norm image in the fixed-point basis; the quotient is
    // the cokernel of the coefficient matrix.
    let basis = IntMatrix::from_fn(n, fixed.len(), |r, c| fixed[c].coords()[r].clone());
    let coefficients = express_in_basis(&basis, &norms)
        .expect("norm image lies in the fixed lattice for an involution");
    let snf = smith_normal_form(&coefficients);
    // Twice a fixed point is a norm, so the quotient is finite.
    debug_assert_eq!(snf.invariant_factors.len(), fixed.len());
    Ok(snf
        .invariant_factors
        .into_iter()
        .filter(|f| !f.is_one())
        .collect())
}

/// The summands of the second cohomology group: one list of invariant
/// factors per generator.
pub fn h2_w(n: usize) -> Result<Vec<Vec<BigInt>>> {
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    (1..=n).map(|i| h2_cyclic(&rho(n, i)?)).collect()
}

/// All classes whose extensions are torsion-free; by the coordinate
/// criterion this filters the all-ones vector out of the `2^n` classes.
pub fn torsion_free_classes(n: usize) -> Vec<CohClass> {
    let mut result = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let bits: Vec<bool> = (0..n).map(|k| mask & (1 << k) != 0).collect();
        let class = CohClass::new(bits);
        if class.is_torsion_free() {
            result.push(class);
        }
    }
    result
}

/// The class of the defining extension. Coordinate `i` is the class of
/// the `i`-th basis vector in fixed points modulo norms for the `i`-th
/// involution, computed by solving the norm equation over the
/// integers.
pub fn extension_class(n: usize) -> Result<CohClass> {
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    let mut bits = Vec::with_capacity(n);
    for i in 1..=n {
        let sigma = rho(n, i)?;
        let norms = sigma.add(&IntMatrix::identity(n))?;
        let target = LatticeVector::unit(n, i)?;
        // The basis vector is fixed by its own involution; it is a
        // coboundary exactly when it is a norm.
        let is_norm = solve(&norms, target.coords()).is_some();
        bits.push(!is_norm);
    }
    Ok(CohClass::new(bits))
}

/// First cohomology of the quotient with lattice coefficients: the
/// cokernel of the lattice embedding into the zero-diagonal
/// translations, as (free rank, torsion factors).
pub fn h1_w(n: usize) -> Result<(usize, Vec<BigInt>)> {
    if n < 3 {
        return Err(Error::RankTooSmall { rank: n, min: 3 });
    }
    // Flatten the off-diagonal positions row-major; column k is the
    // image of the k-th basis vector.
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let images: Vec<crate::monoid::TranslationMatrix> = (1..=n)
        .map(|k| iota(&LatticeVector::unit(n, k).expect("index in range")))
        .collect();
    let matrix = IntMatrix::from_fn(positions.len(), n, |r, c| {
        let (i, j) = positions[r];
        images[c].entry(i, j).clone()
    });
    Ok(cokernel_invariants(&matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ints(factors: &[BigInt]) -> Vec<i64> {
        factors.iter().map(|f| f.to_i64().unwrap()).collect()
    }

    #[test]
    fn cyclic_cohomology_of_the_diagonal_action() {
        // One fixed line, norm doubles it.
        let factors = h2_cyclic(&rho(3, 1).unwrap()).unwrap();
        assert_eq!(ints(&factors), [2]);

        // Trivial action: everything fixed, norms are the doubles.
        let factors = h2_cyclic(&IntMatrix::identity(2)).unwrap();
        assert_eq!(ints(&factors), [2, 2]);

        // Negation: no fixed points at all.
        let negation = IntMatrix::identity(2).neg();
        assert!(h2_cyclic(&negation).unwrap().is_empty());

        // Non-involutions are rejected.
        let shear = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap();
        assert!(matches!(h2_cyclic(&shear), Err(Error::NotInvolution)));
    }

    #[test]
    fn cyclic_cohomology_is_basis_independent() {
        // Conjugating the involution by a unimodular matrix must not
        // change the invariants.
        let conjugator = IntMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]).unwrap();
        let inverse = IntMatrix::from_i64_rows(&[&[1, -1, 1], &[0, 1, -1], &[0, 0, 1]]).unwrap();
        assert!(conjugator.mul(&inverse).unwrap().is_identity());
        let sigma = rho(3, 2).unwrap();
        let conjugated = conjugator.mul(&sigma).unwrap().mul(&inverse).unwrap();
        assert_eq!(
            h2_cyclic(&conjugated).unwrap(),
            h2_cyclic(&sigma).unwrap()
        );
    }

    #[test]
    fn second_cohomology_is_elementary_abelian() {
        for n in 2..=6 {
            let summands = h2_w(n).unwrap();
            assert_eq!(summands.len(), n);
            for summand in summands {
                assert_eq!(ints(&summand), [2]);
            }
        }
        assert!(h2_w(1).is_err());
    }

    #[test]
    fn unique_torsion_free_class() {
        for n in 2..=6 {
            let classes = torsion_free_classes(n);
            assert_eq!(classes.len(), 1);
            assert!(classes[0].bits().iter().all(|&b| b));
            assert_eq!(extension_class(n).unwrap(), classes[0]);
        }
    }

    #[test]
    fn zero_class_and_partial_classes_are_torsion() {
        let zero = CohClass::new(alloc::vec![false, false, false]);
        assert!(!zero.is_torsion_free());
        let partial = CohClass::new(alloc::vec![true, false, true]);
        assert!(!partial.is_torsion_free());
        let full = CohClass::new(alloc::vec![true, true, true]);
        assert!(full.is_torsion_free());
    }

    #[test]
    fn first_cohomology_invariants() {
        for n in 3..=6 {
            let (free, torsion) = h1_w(n).unwrap();
            assert_eq!(free, n * (n - 2), "free rank for n={n}");
            assert_eq!(torsion.len(), n, "torsion rank for n={n}");
            assert!(torsion.iter().all(|f| *f == BigInt::from(2)));
        }
        assert!(matches!(
            h1_w(2),
            Err(Error::RankTooSmall { rank: 2, min: 3 })
        ));
    }

    #[test]
    fn relabelling_fixes_the_extension_class() {
        // Permuting generator labels permutes coordinates, and the
        // all-ones class is invariant.
        let class = extension_class(4).unwrap();
        let permuted: Vec<bool> = [2usize, 3, 0, 1].iter().map(|&k| class.bits()[k]).collect();
        assert_eq!(CohClass::new(permuted), class);
    }
}
