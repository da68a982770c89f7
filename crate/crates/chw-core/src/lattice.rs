//! The lattice `A_n` with its diagonal `W_n`-action, and exact integer
//! linear algebra: Smith normal form, kernels, and cokernel invariants.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::{check_ranks, ReducedWord};

/// An element of the lattice `A_n`, with integer coordinates in the
/// basis given by the squares of the group generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        LatticeVector {
            coords: alloc::vec![BigInt::zero(); rank],
        }
    }

    /// The basis vector `e_i` (1-based).
    pub fn unit(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        let mut v = LatticeVector::zero(rank);
        v.coords[i - 1] = BigInt::one();
        Ok(v)
    }

    pub fn from_coords(coords: Vec<BigInt>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Coordinate `i` (1-based).
    pub fn coord(&self, i: usize) -> &BigInt {
        &self.coords[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &LatticeVector) -> Result<LatticeVector> {
        check_ranks(self.rank(), other.rank())?;
        Ok(LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &LatticeVector) -> Result<LatticeVector> {
        check_ranks(self.rank(), other.rank())?;
        Ok(LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| a * factor).collect(),
        }
    }

    /// Negates every coordinate except coordinate `i` (1-based); this is
    /// the action of the generator `i` on the lattice.
    pub(crate) fn negate_except(&mut self, i: usize) {
        for (pos, c) in self.coords.iter_mut().enumerate() {
            if pos + 1 != i {
                *c = -core::mem::take(c);
            }
        }
    }

    pub(crate) fn add_at(&mut self, i: usize, value: i64) {
        self.coords[i - 1] += value;
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, c) in self.coords.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Action of a word on a lattice vector: componentwise multiplication
/// by the word's sign vector.
pub fn act(word: &ReducedWord, z: &LatticeVector) -> Result<LatticeVector> {
    check_ranks(word.rank(), z.rank())?;
    let signs = word.sign_vector();
    Ok(LatticeVector {
        coords: z
            .coords
            .iter()
            .zip(signs)
            .map(|(c, s)| if s < 0 { -c } else { c.clone() })
            .collect(),
    })
}

/// A rectangular matrix over the integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for k in 0..n {
            m.entries[k * n + k] = BigInt::one();
        }
        m
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    left: (nrows, ncols),
                    right: (nrows, row.len()),
                });
            }
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        IntMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at row `r`, column `c` (0-based).
    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub(crate) fn set_entry(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.entry(r, c).is_one()
                    } else {
                        self.entry(r, c).is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.entry(r, c).is_zero()))
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.entry(c, r).clone())
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(IntMatrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.entry(r, k) * other.entry(k, c)).sum()
        }))
    }

    pub fn mul_vector(&self, v: &LatticeVector) -> Result<LatticeVector> {
        check_ranks(self.cols, v.rank())?;
        Ok(LatticeVector::from_coords(
            (0..self.rows)
                .map(|r| (0..self.cols).map(|c| self.entry(r, c) * &v.coords[c]).sum())
                .collect(),
        ))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (self.cols, self.rows),
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let numerator = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = numerator / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * a[n - 1][n - 1].clone())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The diagonal matrix of the action of generator `i` on the lattice:
/// `+1` at position `i`, `-1` elsewhere.
pub fn rho(n: usize, i: usize) -> Result<IntMatrix> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    Ok(IntMatrix::from_fn(n, n, |r, c| {
        if r != c {
            BigInt::zero()
        } else if r + 1 == i {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }))
}

/// The matrix of the action of a whole word; diagonal with the word's
/// sign vector.
pub fn rho_word(word: &ReducedWord) -> IntMatrix {
    let signs = word.sign_vector();
    let n = word.rank();
    IntMatrix::from_fn(n, n, |r, c| {
        if r != c {
            BigInt::zero()
        } else if signs[r] < 0 {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    })
}

/// Smith normal form `U * A * V = D` with unimodular `U`, `V` and a
/// diagonal `D` whose nonnegative entries divide in order.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub invariant_factors: Vec<BigInt>,
}

/// Computes the Smith normal form by integer row and column reduction.
/// The pivot is always the entry of smallest nonzero absolute value in
/// the trailing block, ties broken in row-major order, which makes the
/// reduction deterministic.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for k in 0..rows.min(cols) {
        while let Some((pi, pj)) = smallest_pivot(&d, k) {
            if pi != k {
                swap_rows(&mut d, k, pi);
                swap_rows(&mut u, k, pi);
            }
            if pj != k {
                swap_cols(&mut d, k, pj);
                swap_cols(&mut v, k, pj);
            }
            let mut remainder_left = false;
            for i in k + 1..rows {
                if !d.entry(i, k).is_zero() {
                    let q = d.entry(i, k) / d.entry(k, k);
                    if !q.is_zero() {
                        row_subtract(&mut d, i, k, &q);
                        row_subtract(&mut u, i, k, &q);
                    }
                    if !d.entry(i, k).is_zero() {
                        remainder_left = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !d.entry(k, j).is_zero() {
                    let q = d.entry(k, j) / d.entry(k, k);
                    if !q.is_zero() {
                        col_subtract(&mut d, j, k, &q);
                        col_subtract(&mut v, j, k, &q);
                    }
                    if !d.entry(k, j).is_zero() {
                        remainder_left = true;
                    }
                }
            }
            if remainder_left {
                continue;
            }
            // Row and column k are clear; make the pivot divide the rest
            // of the trailing block before moving on.
            if let Some(i) = first_nondivisible_row(&d, k) {
                row_add(&mut d, k, i);
                row_add(&mut u, k, i);
                continue;
            }
            break;
        }
        if d.entry(k, k).is_negative() {
            negate_row(&mut d, k);
            negate_row(&mut u, k);
        }
    }

    let invariant_factors = (0..rows.min(cols))
        .map(|k| d.entry(k, k).clone())
        .filter(|f| !f.is_zero())
        .collect::<Vec<_>>();
    debug_assert!(invariant_factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    debug_assert_eq!(u.mul(m).unwrap().mul(&v).unwrap(), d);

    SnfResult {
        u,
        d,
        v,
        invariant_factors,
    }
}

fn smallest_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let value = d.entry(i, j);
            if value.is_zero() {
                continue;
            }
            let magnitude = value.abs();
            match &best {
                Some((current, _, _)) if *current <= magnitude => {}
                _ => best = Some((magnitude, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn first_nondivisible_row(d: &IntMatrix, k: usize) -> Option<usize> {
    let pivot = d.entry(k, k).clone();
    for i in k + 1..d.rows() {
        for j in k + 1..d.cols() {
            if !(d.entry(i, j) % &pivot).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for c in 0..m.cols() {
        let left = m.entry(a, c).clone();
        let right = m.entry(b, c).clone();
        m.set_entry(a, c, right);
        m.set_entry(b, c, left);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for r in 0..m.rows() {
        let left = m.entry(r, a).clone();
        let right = m.entry(r, b).clone();
        m.set_entry(r, a, right);
        m.set_entry(r, b, left);
    }
}

/// `row_i -= q * row_k`
fn row_subtract(m: &mut IntMatrix, i: usize, k: usize, q: &BigInt) {
    for c in 0..m.cols() {
        let value = m.entry(i, c) - q * m.entry(k, c);
        m.set_entry(i, c, value);
    }
}

/// `col_j -= q * col_k`
fn col_subtract(m: &mut IntMatrix, j: usize, k: usize, q: &BigInt) {
    for r in 0..m.rows() {
        let value = m.entry(r, j) - q * m.entry(r, k);
        m.set_entry(r, j, value);
    }
}

/// `row_k += row_i`
fn row_add(m: &mut IntMatrix, k: usize, i: usize) {
    for c in 0..m.cols() {
        let value = m.entry(k, c) + m.entry(i, c);
        m.set_entry(k, c, value);
    }
}

fn negate_row(m: &mut IntMatrix, k: usize) {
    for c in 0..m.cols() {
        let value = -m.entry(k, c);
        m.set_entry(k, c, value);
    }
}

/// Basis of the integer kernel `{v : M v = 0}`, read off the column
/// transform of the Smith normal form. The basis spans the full integer
/// kernel, not merely a finite-index sublattice.
pub fn kernel_basis(m: &IntMatrix) -> Vec<LatticeVector> {
    let snf = smith_normal_form(m);
    let rank = snf.invariant_factors.len();
    (rank..m.cols())
        .map(|j| LatticeVector::from_coords(snf.v.column(j)))
        .collect()
}

/// Invariants of the cokernel of `M : Z^cols -> Z^rows`: free rank and
/// the invariant factors greater than one.
pub fn cokernel_invariants(m: &IntMatrix) -> (usize, Vec<BigInt>) {
    let snf = smith_normal_form(m);
    let rank = snf.invariant_factors.len();
    let torsion = snf
        .invariant_factors
        .into_iter()
        .filter(|f| !f.is_one())
        .collect();
    (m.rows() - rank, torsion)
}

/// Solves `M x = b` over the integers, if a solution exists.
pub(crate) fn solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len());
    let snf = smith_normal_form(m);
    let rows = m.rows();
    let cols = m.cols();
    // U M V = D, so M x = b becomes D y = U b with x = V y.
    let ub: Vec<BigInt> = (0..rows)
        .map(|r| (0..rows).map(|c| snf.u.entry(r, c) * &b[c]).sum())
        .collect();
    let mut y = alloc::vec![BigInt::zero(); cols];
    for r in 0..rows {
        let d = if r < cols {
            snf.d.entry(r, r).clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !ub[r].is_zero() {
                return None;
            }
        } else {
            if !(&ub[r] % &d).is_zero() {
                return None;
            }
            y[r] = &ub[r] / &d;
        }
    }
    let x: Vec<BigInt> = (0..cols)
        .map(|r| (0..cols).map(|c| snf.v.entry(r, c) * &y[c]).sum())
        .collect();
    Some(x)
}

/// Expresses the columns of `b` in the column basis `basis` (a matrix
/// whose columns are a basis of a saturated sublattice containing the
/// columns of `b`). Returns the coefficient matrix `Y` with
/// `basis * Y = b`.
pub(crate) fn express_in_basis(basis: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(basis.rows(), b.rows());
    let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        columns.push(solve(basis, &b.column(j))?);
    }
    // Columns were solved one by one; reassemble as a matrix.
    Some(IntMatrix::from_fn(basis.cols(), b.cols(), |r, c| {
        columns[c][r].clone()
    }))
}

/// Basis of the common fixed lattice of the words' actions, i.e. the
/// intersection of the kernels of `rho(w) - I`.
pub fn fixed_sublattice(n: usize, generators: &[ReducedWord]) -> Result<Vec<LatticeVector>> {
    for w in generators {
        check_ranks(n, w.rank())?;
    }
    // Stack rho(w) - I vertically and take the kernel.
    let stacked = IntMatrix::from_fn(generators.len() * n, n, |r, c| {
        let w = &generators[r / n];
        let row = r % n;
        let diag = if w.sign_vector()[row] < 0 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        if row == c {
            diag - BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    Ok(kernel_basis(&stacked))
}

/// Checks that every integer matrix commuting with the whole diagonal
/// action is itself diagonal, by exact kernel computation of the
/// commutation constraints.
pub fn commutant_is_diagonal(n: usize) -> bool {
    // For X = (x_ab), the constraint rho(i) X = X rho(i) reads
    // (rho(i)_aa - rho(i)_bb) x_ab = 0; stack all of them.
    let mut constraints = IntMatrix::zero(n * n * n, n * n);
    for i in 1..=n {
        for a in 0..n {
            for b in 0..n {
                let lhs: i64 = if a + 1 == i { 1 } else { -1 };
                let rhs: i64 = if b + 1 == i { 1 } else { -1 };
                let row = (i - 1) * n * n + a * n + b;
                constraints.set_entry(row, a * n + b, BigInt::from(lhs - rhs));
            }
        }
    }
    let kernel = kernel_basis(&constraints);
    if kernel.len() != n {
        return false;
    }
    kernel.iter().all(|v| {
        (0..n).all(|a| (0..n).all(|b| a == b || v.coords()[a * n + b].is_zero()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::ReducedWord;

    fn word(rank: usize, letters: &[usize]) -> ReducedWord {
        ReducedWord::from_letters(rank, letters.iter().copied()).unwrap()
    }

    fn factors_i64(factors: &[BigInt]) -> Vec<i64> {
        use num_traits::ToPrimitive;
        factors.iter().map(|f| f.to_i64().unwrap()).collect()
    }

    #[test]
    fn rho_matrices() {
        let r1 = rho(2, 1).unwrap();
        assert_eq!(r1, IntMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]).unwrap());
        let r2 = rho(3, 2).unwrap();
        assert_eq!(
            r2,
            IntMatrix::from_i64_rows(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, -1]]).unwrap()
        );
        assert!(r2.mul(&r2).unwrap().is_identity());
        assert!(rho(3, 4).is_err());
        assert!(rho(3, 0).is_err());
    }

    #[test]
    fn action_on_vectors() {
        let z = LatticeVector::from_i64(&[1, 2, 3]);
        assert_eq!(act(&word(3, &[]), &z).unwrap(), z);
        assert_eq!(
            act(&word(3, &[1]), &z).unwrap(),
            LatticeVector::from_i64(&[1, -2, -3])
        );
        assert_eq!(
            act(&word(3, &[1, 2]), &LatticeVector::from_i64(&[1, 1, 1])).unwrap(),
            LatticeVector::from_i64(&[-1, -1, 1])
        );
        assert!(act(&word(2, &[1]), &z).is_err());
    }

    #[test]
    fn action_is_compatible_with_multiplication() {
        let w1 = word(3, &[1, 2, 3]);
        let w2 = word(3, &[3, 1]);
        let z = LatticeVector::from_i64(&[2, -1, 5]);
        let joint = act(&w1.multiply(&w2).unwrap(), &z).unwrap();
        let stepwise = act(&w1, &act(&w2, &z).unwrap()).unwrap();
        assert_eq!(joint, stepwise);
    }

    #[test]
    fn snf_of_diagonal() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 2]]).unwrap();
        let snf = smith_normal_form(&m);
        assert_eq!(factors_i64(&snf.invariant_factors), [2, 2]);
    }

    #[test]
    fn snf_small_example() {
        // Divisors forced by gcd of entries (2) and |det| (8).
        let m = IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]).unwrap();
        let snf = smith_normal_form(&m);
        assert_eq!(factors_i64(&snf.invariant_factors), [2, 4]);
        assert_eq!(snf.u.mul(&m).unwrap().mul(&snf.v).unwrap(), snf.d);
        assert!(snf.u.is_unimodular());
        assert!(snf.v.is_unimodular());
    }

    #[test]
    fn snf_of_zero_and_empty() {
        let m = IntMatrix::zero(3, 2);
        let snf = smith_normal_form(&m);
        assert!(snf.invariant_factors.is_empty());
        assert!(snf.d.is_zero());

        let empty = IntMatrix::zero(0, 3);
        let snf = smith_normal_form(&empty);
        assert!(snf.invariant_factors.is_empty());
        assert_eq!(kernel_basis(&empty).len(), 3);
    }

    #[test]
    fn cokernel_readoff() {
        let id = IntMatrix::identity(2);
        assert_eq!(cokernel_invariants(&id), (0, Vec::new()));

        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 0]]).unwrap();
        let (free, torsion) = cokernel_invariants(&m);
        assert_eq!(free, 1);
        assert_eq!(factors_i64(&torsion), [2]);
    }

    #[test]
    fn kernel_of_rho_minus_identity() {
        // Fixed lattice of a single generator is the coordinate line.
        let basis = fixed_sublattice(3, &[word(3, &[1])]).unwrap();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert!(v.coords()[1].is_zero() && v.coords()[2].is_zero());
        assert!(v.coords()[0].abs().is_one());

        // All generators together fix nothing, at every small rank.
        for n in 3..=6 {
            let all: Vec<ReducedWord> = (1..=n).map(|i| word(n, &[i])).collect();
            assert!(fixed_sublattice(n, &all).unwrap().is_empty());
        }

        // The empty word fixes everything.
        let basis = fixed_sublattice(3, &[word(3, &[])]).unwrap();
        assert_eq!(basis.len(), 3);
        for (k, v) in basis.iter().enumerate() {
            assert_eq!(v, &LatticeVector::unit(3, k + 1).unwrap());
        }
    }

    #[test]
    fn commutant_is_diagonal_small_ranks() {
        for n in 2..=5 {
            assert!(commutant_is_diagonal(n), "commutant not diagonal for n={n}");
        }
    }

    #[test]
    fn determinants() {
        let m = IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]).unwrap();
        assert_eq!(m.det().unwrap(), BigInt::from(-8));
        let singular = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(singular.det().unwrap().is_zero());
        assert!(IntMatrix::identity(4).is_unimodular());
        assert!(!IntMatrix::zero(2, 2).is_unimodular());
    }

    #[test]
    fn integer_solving() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]).unwrap();
        let b = [BigInt::from(4), BigInt::from(9)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(x, alloc::vec![BigInt::from(2), BigInt::from(3)]);
        let b = [BigInt::from(1), BigInt::from(0)];
        assert!(solve(&m, &b).is_none());
    }
}
