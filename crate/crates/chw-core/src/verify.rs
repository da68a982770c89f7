//! Executable verification suites.
//!
//! Each suite machine-checks one block of structural claims about
//! `G_n`: the presentation of the quotient's automorphism group, the
//! translation monoid laws, the relation tables of the automorphism
//! group and of its quotient by inner automorphisms, and the
//! structural facts feeding the cohomology computations. Reports are
//! deterministic for a fixed rank and seed, and every suite carries at
//! least one deliberately mutated relation that must fail, guarding
//! the harness against vacuous passes.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::auto::{
    induced_pair, is_semilinear, sn_section, AutoLetter, AutoToken, AutoWord, GEndomorphism,
};
use crate::cohomology::{extension_class, h1_w, h2_w, torsion_free_classes};
use crate::error::{Error, Result};
use crate::group::{embed_a, GroupElement};
use crate::lattice::{commutant_is_diagonal, fixed_sublattice, IntMatrix, LatticeVector};
use crate::monoid::{iota, TranslationMatrix};
use crate::word::{Permutation, ReducedWord, WAutomorphism};

/// Largest rank the suites accept; keeps the exhaustive sweeps and the
/// conjugation-witness searches inside the ball cap and the runtime
/// budget.
pub const MAX_SUITE_RANK: usize = 6;

/// Outcome of a single relation or claim instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instance: String,
    pub pass: bool,
    pub detail: Option<String>,
}

/// All results of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

struct SuiteBuilder {
    suite: String,
    n: usize,
    seed: u64,
    checks: Vec<CheckResult>,
}

impl SuiteBuilder {
    fn new(suite: &str, n: usize, seed: u64) -> Self {
        SuiteBuilder {
            suite: suite.to_string(),
            n,
            seed,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, instance: String, pass: bool, detail: Option<String>) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            instance,
            pass,
            detail,
        });
    }

    fn check_endos(
        &mut self,
        name: &str,
        instance: String,
        lhs: &GEndomorphism,
        rhs: &GEndomorphism,
    ) {
        let detail = endo_mismatch(lhs, rhs);
        self.check(name, instance, detail.is_none(), detail);
    }

    fn check_w_autos(
        &mut self,
        name: &str,
        instance: String,
        lhs: &WAutomorphism,
        rhs: &WAutomorphism,
    ) {
        let detail = w_mismatch(lhs, rhs);
        self.check(name, instance, detail.is_none(), detail);
    }

    fn finish(self) -> SuiteReport {
        let mut labels = BTreeSet::new();
        for check in &self.checks {
            let unique = labels.insert((check.name.clone(), check.instance.clone()));
            debug_assert!(unique, "duplicate instance {}/{}", check.name, check.instance);
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let failed = self.checks.len() - passed;
        SuiteReport {
            suite: self.suite,
            n: self.n,
            seed: self.seed,
            checks: self.checks,
            passed,
            failed,
        }
    }
}

fn endo_mismatch(lhs: &GEndomorphism, rhs: &GEndomorphism) -> Option<String> {
    if lhs.rank() != rhs.rank() {
        return Some(format!("ranks {} vs {}", lhs.rank(), rhs.rank()));
    }
    (1..=lhs.rank())
        .find(|&i| lhs.image(i) != rhs.image(i))
        .map(|i| format!("x{i}: {} vs {}", lhs.image(i), rhs.image(i)))
}

fn w_mismatch(lhs: &WAutomorphism, rhs: &WAutomorphism) -> Option<String> {
    if lhs.rank() != rhs.rank() {
        return Some(format!("ranks {} vs {}", lhs.rank(), rhs.rank()));
    }
    (1..=lhs.rank())
        .find(|&i| lhs.image(i) != rhs.image(i))
        .map(|i| format!("x{i}: {} vs {}", lhs.image(i), rhs.image(i)))
}

fn require_rank(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::RankTooSmall { rank: n, min })
    } else if n > MAX_SUITE_RANK {
        Err(Error::RankTooLarge {
            rank: n,
            max: MAX_SUITE_RANK,
        })
    } else {
        Ok(())
    }
}

/// Ordered pairs `(i, j)` with distinct entries in `1..=n`.
fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Exhaustive symmetric group for small ranks, a generating set above.
fn perm_instances(n: usize) -> Vec<Permutation> {
    if n <= 4 {
        Permutation::all(n)
    } else {
        Permutation::generating_set(n)
    }
}

fn rand_int(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}

fn rand_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> LatticeVector {
    let coords: Vec<i64> = (0..n).map(|_| rand_int(rng, -bound, bound)).collect();
    LatticeVector::from_i64(&coords)
}

fn rand_matrix(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> TranslationMatrix {
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|_| (0..n).map(|_| BigInt::from(rand_int(rng, lo, hi))).collect())
        .collect();
    TranslationMatrix::from_rows(rows).expect("square by construction")
}

fn rand_unit(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> TranslationMatrix {
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        BigInt::from(-rand_int(rng, 0, 1))
                    } else {
                        BigInt::from(rand_int(rng, -bound, bound))
                    }
                })
                .collect()
        })
        .collect();
    TranslationMatrix::from_rows(rows).expect("square by construction")
}

fn rand_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> ReducedWord {
    let len = rand_int(rng, 0, max_len as i64) as usize;
    let letters: Vec<usize> = (0..len)
        .map(|_| rand_int(rng, 1, n as i64) as usize)
        .collect();
    ReducedWord::from_letters(n, letters).expect("letters in range")
}

fn rand_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for k in (1..n).rev() {
        let swap_with = rand_int(rng, 0, k as i64) as usize;
        images.swap(k, swap_with);
    }
    Permutation::from_images(images).expect("shuffle is a bijection")
}

fn rand_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let i = rand_int(rng, 1, n as i64) as usize;
    let mut j = rand_int(rng, 1, n as i64 - 1) as usize;
    if j >= i {
        j += 1;
    }
    (i, j)
}

fn rand_autoword(rng: &mut ChaCha8Rng, n: usize, max_tokens: usize) -> AutoWord {
    let len = rand_int(rng, 1, max_tokens as i64) as usize;
    let letters: Vec<AutoLetter> = (0..len)
        .map(|_| {
            let token = match rand_int(rng, 0, 3) {
                0 => AutoToken::Perm(rand_permutation(rng, n)),
                1 => {
                    let (i, j) = rand_pair(rng, n);
                    AutoToken::Fr { i, j }
                }
                2 => {
                    let (i, j) = rand_pair(rng, n);
                    AutoToken::Eps {
                        i,
                        j,
                        exponent: BigInt::from(rand_int(rng, -3, 3)),
                    }
                }
                _ => AutoToken::Delta {
                    i: rand_int(rng, 1, n as i64) as usize,
                },
            };
            if rand_int(rng, 0, 2) == 0 {
                AutoLetter::inverted(token)
            } else {
                AutoLetter::new(token)
            }
        })
        .collect();
    AutoWord::new(n, letters).expect("indices in range")
}

/// Relations of the automorphism group of the quotient: permutation
/// composition, involutivity of the Fouxe-Rabinovitch generators, their
/// commutation and braid-like relations, and the symmetric-group
/// action.
pub fn suite_autw(n: usize, seed: u64) -> Result<SuiteReport> {
    require_rank(n, 3)?;
    let mut suite = SuiteBuilder::new("autw", n, seed);
    let perms = perm_instances(n);
    let pairs = ordered_pairs(n);
    let identity = WAutomorphism::identity(n);

    for sigma in &perms {
        for tau in &perms {
            let lhs =
                WAutomorphism::permutation(sigma).compose(&WAutomorphism::permutation(tau))?;
            let rhs = WAutomorphism::permutation(&sigma.compose(tau)?);
            suite.check_w_autos(
                "rel1_perm_compose",
                format!("sigma={sigma},tau={tau}"),
                &lhs,
                &rhs,
            );
        }
    }

    for &(i, j) in &pairs {
        let fr = WAutomorphism::fouxe_rabinovitch(n, i, j)?;
        suite.check_w_autos(
            "rel2_fr_involution",
            format!("i={i},j={j}"),
            &fr.compose(&fr)?,
            &identity,
        );
    }

    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if i == k || j == k || l == i {
                continue;
            }
            let a = WAutomorphism::fouxe_rabinovitch(n, i, j)?;
            let b = WAutomorphism::fouxe_rabinovitch(n, k, l)?;
            suite.check_w_autos(
                "rel3_fr_commute",
                format!("i={i},j={j},k={k},l={l}"),
                &a.compose(&b)?,
                &b.compose(&a)?,
            );
        }
    }

    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=n {
                if i == j || i == m || j == m {
                    continue;
                }
                let aij = WAutomorphism::fouxe_rabinovitch(n, i, j)?;
                let amj = WAutomorphism::fouxe_rabinovitch(n, m, j)?;
                let aim = WAutomorphism::fouxe_rabinovitch(n, i, m)?;
                let product = aij.compose(&amj)?;
                suite.check_w_autos(
                    "rel4_fr_braid",
                    format!("i={i},j={j},m={m}"),
                    &product.compose(&aim)?,
                    &aim.compose(&product)?,
                );
            }
        }
    }

    for sigma in &perms {
        for &(i, j) in &pairs {
            let lhs = WAutomorphism::permutation(sigma)
                .compose(&WAutomorphism::fouxe_rabinovitch(n, i, j)?)?;
            let rhs = WAutomorphism::fouxe_rabinovitch(n, sigma.apply(i), sigma.apply(j))?
                .compose(&WAutomorphism::permutation(sigma))?;
            suite.check_w_autos(
                "rel5_perm_action",
                format!("sigma={sigma},i={i},j={j}"),
                &lhs,
                &rhs,
            );
        }
    }

    // Negative control: with the square replaced by a cube the
    // involution relation must fail.
    let fr = WAutomorphism::fouxe_rabinovitch(n, 1, 2)?;
    let cube = fr.compose(&fr)?.compose(&fr)?;
    suite.check(
        "negative_fr_cube",
        "i=1,j=2".to_string(),
        cube != identity,
        Some("mutated relation: the cube of a Fouxe-Rabinovitch generator must differ from the identity".to_string()),
    );

    Ok(suite.finish())
}

/// Laws of the translation monoid: identity and associativity, the unit
/// criterion against an independent divisibility oracle, the
/// zero-diagonal/diagonal splitting, sign conjugation, the relation
/// table of the unit group, and the representation as endomorphisms.
pub fn suite_monoid(n: usize, seed: u64) -> Result<SuiteReport> {
    require_rank(n, 2)?;
    let mut suite = SuiteBuilder::new("monoid", n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = TranslationMatrix::zero(n);

    for sample in 0..20 {
        let a = rand_matrix(&mut rng, n, -4, 4);
        let pass = zero.star(&a)? == a && a.star(&zero)? == a;
        suite.check("star_identity", format!("sample={sample}"), pass, None);
    }

    for sample in 0..100 {
        let a = rand_matrix(&mut rng, n, -4, 4);
        let b = rand_matrix(&mut rng, n, -4, 4);
        let c = rand_matrix(&mut rng, n, -4, 4);
        let left = a.star(&b)?.star(&c)?;
        let right = a.star(&b.star(&c)?)?;
        suite.check(
            "star_associative",
            format!("sample={sample}"),
            left == right,
            None,
        );
    }

    // Unit criterion against the divisibility oracle; exhaustive over a
    // small entry box at rank two, sampled above.
    if n == 2 {
        let mut index = 0;
        for e00 in -2..=1i64 {
            for e01 in -2..=1i64 {
                for e10 in -2..=1i64 {
                    for e11 in -2..=1i64 {
                        let a = TranslationMatrix::from_i64_rows(&[&[e00, e01], &[e10, e11]])
                            .expect("square");
                        push_unit_check(&mut suite, &a, index)?;
                        index += 1;
                    }
                }
            }
        }
    } else {
        for index in 0..200 {
            let a = rand_matrix(&mut rng, n, -2, 1);
            push_unit_check(&mut suite, &a, index)?;
        }
    }

    for sample in 0..50 {
        let a = rand_matrix(&mut rng, n, -4, 4);
        let (off, diag) = a.decompose();
        // The splitting respects units: the zero-diagonal part always
        // is one, the diagonal part exactly when the original is.
        let pass = off.has_zero_diagonal()
            && diag.is_diagonal()
            && off.star(&diag)? == a
            && off.is_unit()
            && diag.is_unit() == a.is_unit();
        suite.check(
            "decompose_recompose",
            format!("sample={sample}"),
            pass,
            None,
        );
    }

    for k in 1..=n {
        for sample in 0..10 {
            let a = rand_matrix(&mut rng, n, -4, 4);
            let off = a.decompose().0;
            let delta = TranslationMatrix::delta(n, k)?;
            let conjugated = off.delta_conjugate(k)?;
            let via_star = delta.star(&off.star(&delta)?)?;
            suite.check(
                "delta_conjugate_matches_star",
                format!("k={k},sample={sample}"),
                conjugated == via_star,
                None,
            );
        }
    }

    // Relation table of the unit group's semidirect structure.
    for (i, j) in ordered_pairs(n) {
        let delta = TranslationMatrix::delta(n, i)?;
        let eps = TranslationMatrix::eps(n, j, i)?;
        let conjugated = delta.star(&eps.star(&delta)?)?;
        suite.check(
            "prop_delta_eps_same_column",
            format!("i={i},j={j}"),
            conjugated == eps.neg(),
            None,
        );
    }
    for i in 1..=n {
        for (j, k) in ordered_pairs(n) {
            if k == i {
                continue;
            }
            let delta = TranslationMatrix::delta(n, i)?;
            let eps = TranslationMatrix::eps(n, j, k)?;
            let conjugated = delta.star(&eps.star(&delta)?)?;
            suite.check(
                "prop_delta_eps_other_column",
                format!("i={i},j={j},k={k}"),
                conjugated == eps,
                None,
            );
        }
    }

    for sample in 0..30 {
        let a = rand_matrix(&mut rng, n, -4, 4);
        suite.check(
            "t_image_satisfies_relators",
            format!("sample={sample}"),
            crate::auto::check_von_dyck(a.to_endomorphism().images()),
            None,
        );
    }

    for sample in 0..100 {
        let a = rand_matrix(&mut rng, n, -4, 4);
        let b = rand_matrix(&mut rng, n, -4, 4);
        let composite = a.to_endomorphism().compose(&b.to_endomorphism())?;
        suite.check_endos(
            "t_homomorphism",
            format!("sample={sample}"),
            &a.star(&b)?.to_endomorphism(),
            &composite,
        );
    }

    for sample in 0..50 {
        let a = rand_matrix(&mut rng, n, -4, 4);
        let b = rand_matrix(&mut rng, n, -4, 4);
        let pass = (a == b) == (a.to_endomorphism() == b.to_endomorphism());
        suite.check("t_injective", format!("sample={sample}"), pass, None);
    }

    for sample in 0..100 {
        let i = rand_int(&mut rng, 1, n as i64) as usize;
        let a = rand_vector(&mut rng, n, 3);
        let shifted = GroupElement::generator(n, i)?.multiply(&embed_a(a.clone()))?;
        let squared = shifted.power(&BigInt::from(2));
        let expected = embed_a(crate::group::square_shifted(i, &a)?);
        suite.check(
            "square_shift_formula",
            format!("sample={sample}"),
            squared == expected,
            None,
        );
    }

    // Negative control: sign conjugation with the wrong sign must fail.
    let delta = TranslationMatrix::delta(n, 1)?;
    let eps = TranslationMatrix::eps(n, 2, 1)?;
    let conjugated = delta.star(&eps.star(&delta)?)?;
    suite.check(
        "negative_delta_eps_sign",
        "i=1,j=2".to_string(),
        conjugated != eps,
        Some("mutated relation: conjugation by the sign flip must negate the same-column elementary matrix".to_string()),
    );

    Ok(suite.finish())
}

fn push_unit_check(
    suite: &mut SuiteBuilder,
    a: &TranslationMatrix,
    index: usize,
) -> Result<()> {
    let claimed = a.is_unit();
    let oracle = divisibility_inverse(a);
    let consistent = match (&oracle, claimed) {
        (Some(inverse), true) => {
            a.star(inverse)?.is_zero()
                && inverse.star(a)?.is_zero()
                && a.unit_inverse()? == *inverse
        }
        (None, false) => true,
        _ => false,
    };
    suite.check(
        "unit_characterization",
        format!("index={index},matrix={a}"),
        consistent,
        None,
    );
    Ok(())
}

/// Independent oracle for invertibility: solve `a * b = 0` entrywise by
/// the divisibility conditions `b_ij = -a_ij / (1 + 2 a_jj)`, then
/// confirm the candidate is two-sided.
fn divisibility_inverse(a: &TranslationMatrix) -> Option<TranslationMatrix> {
    use num_traits::{One, Zero};
    let n = a.size();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let factor = BigInt::one() + BigInt::from(2) * a.entry(j, j);
            let numerator = -a.entry(i, j);
            if factor.is_zero() || !(&numerator % &factor).is_zero() {
                return None;
            }
            row.push(numerator / factor);
        }
        rows.push(row);
    }
    let b = TranslationMatrix::from_rows(rows).expect("square");
    let two_sided = a.star(&b).ok()?.is_zero() && b.star(a).ok()?.is_zero();
    two_sided.then_some(b)
}

/// The three groups of relations presenting the automorphism group:
/// translation relations, lifted quotient relations, and the action of
/// the lifts on the translations. The commutation family between lifts
/// and elementary translations is checked against the full empirically
/// verified table; instances admitted by the looser stated side
/// conditions but violating the commutator identity are classified and
/// reported rather than skipped.
pub fn suite_autg(n: usize, seed: u64) -> Result<SuiteReport> {
    require_rank(n, 3)?;
    let mut suite = SuiteBuilder::new("autg", n, seed);
    let perms = perm_instances(n);
    let pairs = ordered_pairs(n);
    let identity = GEndomorphism::identity(n);

    let eps = |i: usize, j: usize| GEndomorphism::eps(n, i, j);
    let eps_pow =
        |i: usize, j: usize, k: i64| GEndomorphism::eps_pow(n, i, j, &BigInt::from(k));
    let delta = |i: usize| GEndomorphism::delta(n, i);
    let fr = |i: usize, j: usize| GEndomorphism::fouxe_rabinovitch(n, i, j);

    // Group 1: relations inside the unit group of the monoid.
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            suite.check_endos(
                "eps_commute",
                format!("i={i},j={j},k={k},l={l}"),
                &eps(i, j)?.compose(&eps(k, l)?)?,
                &eps(k, l)?.compose(&eps(i, j)?)?,
            );
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            suite.check_endos(
                "delta_commute",
                format!("i={i},j={j}"),
                &delta(i)?.compose(&delta(j)?)?,
                &delta(j)?.compose(&delta(i)?)?,
            );
        }
    }
    for i in 1..=n {
        suite.check_endos(
            "delta_involution",
            format!("i={i}"),
            &delta(i)?.compose(&delta(i)?)?,
            &identity,
        );
    }
    for i in 1..=n {
        for &(k, l) in &pairs {
            let conjugated = delta(i)?.compose(&eps(k, l)?)?.compose(&delta(i)?)?;
            let expected = if l == i {
                eps_pow(k, l, -1)?
            } else {
                eps(k, l)?
            };
            suite.check_endos(
                "delta_eps_conjugation",
                format!("i={i},k={k},l={l}"),
                &conjugated,
                &expected,
            );
        }
    }

    // Group 2: lifted relations of the quotient's automorphism group.
    for sigma in &perms {
        for tau in &perms {
            suite.check_endos(
                "perm_compose",
                format!("sigma={sigma},tau={tau}"),
                &GEndomorphism::permutation(sigma)
                    .compose(&GEndomorphism::permutation(tau))?,
                &GEndomorphism::permutation(&sigma.compose(tau)?),
            );
        }
    }
    for &(i, j) in &pairs {
        suite.check_endos(
            "fr_square",
            format!("i={i},j={j}"),
            &fr(i, j)?.compose(&fr(i, j)?)?,
            &eps_pow(i, j, -2)?,
        );
    }
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if i == k || j == k || l == i {
                continue;
            }
            suite.check_endos(
                "fr_commute",
                format!("i={i},j={j},k={k},l={l}"),
                &fr(i, j)?.compose(&fr(k, l)?)?,
                &fr(k, l)?.compose(&fr(i, j)?)?,
            );
        }
    }
    // Tuples the stated side conditions would admit into the
    // commutator family even though the generators do not commute; the
    // pair acting on the same generator twists instead.
    for &(i, j) in &pairs {
        for l in 1..=n {
            if l == i || l == j {
                continue;
            }
            let lhs = fr(i, j)?.compose(&fr(i, l)?)?;
            let rhs = fr(i, l)?.compose(&fr(i, j)?)?;
            suite.check(
                "fr_commute_same_target_fails",
                format!("i={i},j={j},l={l}"),
                lhs != rhs,
                Some("side condition correction: generators conjugating the same generator do not commute".to_string()),
            );
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=n {
                if i == j || i == m || j == m {
                    continue;
                }
                let product = fr(i, j)?.compose(&fr(m, j)?)?;
                suite.check_endos(
                    "fr_braid",
                    format!("i={i},j={j},m={m}"),
                    &product.compose(&fr(i, m)?)?,
                    &fr(i, m)?.compose(&product)?,
                );
            }
        }
    }
    for sigma in &perms {
        for &(i, j) in &pairs {
            suite.check_endos(
                "perm_fr_conjugation",
                format!("sigma={sigma},i={i},j={j}"),
                &GEndomorphism::permutation(sigma).compose(&fr(i, j)?)?,
                &fr(sigma.apply(i), sigma.apply(j))?
                    .compose(&GEndomorphism::permutation(sigma))?,
            );
        }
    }

    // Group 3: action of the lifts on the translations.
    for sigma in &perms {
        for i in 1..=n {
            suite.check_endos(
                "perm_delta",
                format!("sigma={sigma},i={i}"),
                &GEndomorphism::permutation(sigma).compose(&delta(i)?)?,
                &delta(sigma.apply(i))?.compose(&GEndomorphism::permutation(sigma))?,
            );
        }
    }
    for sigma in &perms {
        for &(k, l) in &pairs {
            suite.check_endos(
                "perm_eps",
                format!("sigma={sigma},k={k},l={l}"),
                &GEndomorphism::permutation(sigma).compose(&eps(k, l)?)?,
                &eps(sigma.apply(k), sigma.apply(l))?
                    .compose(&GEndomorphism::permutation(sigma))?,
            );
        }
    }
    for &(i, j) in &pairs {
        for k in 1..=n {
            if k == j {
                continue;
            }
            suite.check_endos(
                "fr_delta_commute",
                format!("i={i},j={j},k={k}"),
                &fr(i, j)?.compose(&delta(k)?)?,
                &delta(k)?.compose(&fr(i, j)?)?,
            );
        }
    }
    for &(i, j) in &pairs {
        suite.check_endos(
            "fr_delta_twist",
            format!("i={i},j={j}"),
            &fr(i, j)?.compose(&delta(j)?)?,
            &delta(j)?.compose(&eps_pow(i, j, 2)?)?.compose(&fr(i, j)?)?,
        );
    }
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let (expected, label) = fr_eps_expected(i, j, k, l);
            let lhs = fr(i, j)?.compose(&eps(k, l)?)?;
            let rhs = match expected {
                FrEpsForm::Commute => eps(k, l)?.compose(&fr(i, j)?)?,
                FrEpsForm::Invert => eps_pow(k, l, -1)?.compose(&fr(i, j)?)?,
                FrEpsForm::Twist => eps(k, l)?
                    .compose(&eps_pow(i, l, 2)?)?
                    .compose(&fr(i, j)?)?,
            };
            let mismatch = endo_mismatch(&lhs, &rhs);
            let pass = mismatch.is_none();
            // Note instances where the looser stated conditions would
            // have classified the pair as commuting.
            let stated_commute = k != j && l != i;
            let detail = match mismatch {
                Some(m) => Some(m),
                None if stated_commute && expected != FrEpsForm::Commute => Some(format!(
                    "holds: {label}; stated side conditions would classify this as a commutator instance"
                )),
                None => Some(format!("holds: {label}")),
            };
            suite.check(
                "fr_eps_table",
                format!("i={i},j={j},k={k},l={l}"),
                pass,
                detail,
            );
        }
    }

    // Negative control: the square of a lift with the wrong exponent
    // sign must fail.
    suite.check(
        "negative_fr_square_sign",
        "i=1,j=2".to_string(),
        fr(1, 2)?.compose(&fr(1, 2)?)? != eps_pow(1, 2, 2)?,
        Some("mutated relation: the square of a lift equals the negative elementary power, not the positive one".to_string()),
    );

    Ok(suite.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FrEpsForm {
    Commute,
    Invert,
    Twist,
}

/// The verified relation between a Fouxe-Rabinovitch lift and an
/// elementary translation, by target and column overlap.
fn fr_eps_expected(i: usize, j: usize, k: usize, l: usize) -> (FrEpsForm, &'static str) {
    if (k, l) == (i, j) {
        (FrEpsForm::Commute, "commute")
    } else if l == i || k == i {
        (FrEpsForm::Invert, "inverse conjugation")
    } else if k == j {
        (FrEpsForm::Twist, "twist by the squared elementary translation")
    } else {
        (FrEpsForm::Commute, "commute")
    }
}

/// Relations that become trivial in the outer automorphism group: the
/// column products of squared elementary translations are conjugation
/// by inverse squares of generators, and the products of lifts
/// conjugating by a fixed generator are conjugation by that generator.
/// Both are verified as exact automorphism equalities and re-found by
/// the ball search for conjugation witnesses. The index convention of
/// the lattice embedding is pinned by conjugation oracles: the
/// column-indexed form verifies, the row-indexed form fails.
pub fn suite_outg(n: usize, seed: u64) -> Result<SuiteReport> {
    require_rank(n, 3)?;
    let mut suite = SuiteBuilder::new("outg", n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for j in 1..=n {
        // Column product of squared elementary translations.
        let mut product = GEndomorphism::identity(n);
        for i in 1..=n {
            if i != j {
                product =
                    product.compose(&GEndomorphism::eps_pow(n, i, j, &BigInt::from(2))?)?;
            }
        }
        let witness = embed_a(LatticeVector::unit(n, j)?.neg());
        suite.check_endos(
            "rel1_eps_product",
            format!("j={j}"),
            &product,
            &GEndomorphism::inner(&witness),
        );
        let found = product.inner_witness(1, 2)?;
        suite.check(
            "rel1_witness",
            format!("j={j}"),
            found.as_ref() == Some(&witness),
            found.map(|g| format!("witness {g}")),
        );

        let mut lift_product = GEndomorphism::identity(n);
        for k in 1..=n {
            if k != j {
                lift_product =
                    lift_product.compose(&GEndomorphism::fouxe_rabinovitch(n, k, j)?)?;
            }
        }
        let generator = GroupElement::generator(n, j)?;
        suite.check_endos(
            "rel2_fr_product",
            format!("j={j}"),
            &lift_product,
            &GEndomorphism::inner(&generator),
        );
        let found = lift_product.inner_witness(1, 2)?;
        suite.check(
            "rel2_witness",
            format!("j={j}"),
            found.as_ref() == Some(&generator),
            found.map(|g| format!("witness {g}")),
        );
    }

    // Convention checks for the lattice embedding.
    for sample in 0..10 {
        let z = rand_vector(&mut rng, n, 3);
        let lhs = iota(&z).to_endomorphism();
        let rhs = GEndomorphism::inner(&embed_a(z.clone()));
        let mismatch = endo_mismatch(&lhs, &rhs);
        let pass = mismatch.is_none();
        let detail = mismatch.or_else(|| {
            Some("column convention: entry (i,j) = -2 z_j matches conjugation".to_string())
        });
        suite.check(
            "iota_conjugation_column_form",
            format!("sample={sample},z={z}"),
            pass,
            detail,
        );
    }
    {
        let z = LatticeVector::unit(n, 1)?;
        let row_form = TranslationMatrix::from_int_matrix(IntMatrix::from_fn(n, n, |r, c| {
            if r == c {
                BigInt::from(0)
            } else {
                BigInt::from(-2) * &z.coords()[r]
            }
        }))?;
        let rhs = GEndomorphism::inner(&embed_a(z));
        suite.check(
            "iota_row_form_fails",
            "z=e1".to_string(),
            row_form.to_endomorphism() != rhs,
            Some("row-indexed variant (entry (i,j) = -2 z_i) does not give conjugation; the column-indexed form does".to_string()),
        );

        let mut row_product = GEndomorphism::identity(n);
        for l in 2..=n {
            row_product =
                row_product.compose(&GEndomorphism::eps_pow(n, 1, l, &BigInt::from(2))?)?;
        }
        let inner = GEndomorphism::inner(&embed_a(LatticeVector::unit(n, 1)?.neg()));
        suite.check(
            "rel1_row_form_fails",
            "j=1".to_string(),
            row_product != inner,
            Some("row-indexed product of squared elementary translations is not inner; the column-indexed product is".to_string()),
        );
    }

    // Negative control: the column product against the wrong inner
    // automorphism must fail.
    {
        let mut product = GEndomorphism::identity(n);
        for i in 2..=n {
            product = product.compose(&GEndomorphism::eps_pow(n, i, 1, &BigInt::from(2))?)?;
        }
        let wrong = GEndomorphism::inner(&embed_a(LatticeVector::unit(n, 1)?));
        suite.check(
            "negative_rel1_wrong_inner",
            "j=1".to_string(),
            product != wrong,
            Some("mutated relation: conjugation by the square instead of its inverse must not match".to_string()),
        );
    }

    Ok(suite.finish())
}

/// Structural facts: the lattice is preserved by words in the named
/// generators, translations are exactly the kernel of the projection,
/// the projection lifts a generating set, the lattice automorphisms
/// compatible with the identity are the sign diagonals, the
/// symmetric-group section is a homomorphism of pairs, zero-diagonal
/// translations are exactly the maps inducing the identity on the
/// lattice, and the cohomology invariants have their expected values.
pub fn suite_structure(n: usize, seed: u64) -> Result<SuiteReport> {
    require_rank(n, 3)?;
    let mut suite = SuiteBuilder::new("structure", n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for sample in 0..30 {
        let phi = rand_autoword(&mut rng, n, 5).evaluate()?;
        let pass = (1..=n).all(|i| {
            let image = phi
                .apply(&embed_a(LatticeVector::unit(n, i).expect("in range")))
                .expect("ranks agree");
            image.word().is_empty()
        });
        suite.check(
            "characteristic_sublattice",
            format!("sample={sample}"),
            pass,
            None,
        );
    }

    for sample in 0..30 {
        let a = rand_unit(&mut rng, n, 4);
        let phi = a.to_endomorphism();
        let pass =
            phi.translation_part().as_ref() == Some(&a) && phi.induced_w()?.is_identity();
        suite.check(
            "translation_kernel_roundtrip",
            format!("sample={sample}"),
            pass,
            None,
        );
    }

    for sample in 0..30 {
        let phi = rand_autoword(&mut rng, n, 4).evaluate()?;
        let part = phi.translation_part();
        let identity_on_w = phi.induced_w()?.is_identity();
        let pass = part.is_some() == identity_on_w
            && part.is_none_or(|a| a.to_endomorphism() == phi);
        suite.check(
            "translation_part_iff_identity_on_w",
            format!("sample={sample}"),
            pass,
            None,
        );
    }

    for sigma in Permutation::generating_set(n) {
        let lift = GEndomorphism::permutation(&sigma);
        suite.check_w_autos(
            "pi_lifts_generators",
            format!("sigma={sigma}"),
            &lift.induced_w()?,
            &WAutomorphism::permutation(&sigma),
        );
    }
    for (i, j) in ordered_pairs(n) {
        let lift = GEndomorphism::fouxe_rabinovitch(n, i, j)?;
        suite.check_w_autos(
            "pi_lifts_generators",
            format!("i={i},j={j}"),
            &lift.induced_w()?,
            &WAutomorphism::fouxe_rabinovitch(n, i, j)?,
        );
    }

    let identity_w = WAutomorphism::identity(n);
    for mask in 0u64..(1 << n) {
        let signs = IntMatrix::from_fn(n, n, |r, c| {
            if r != c {
                BigInt::from(0)
            } else if mask & (1 << r) != 0 {
                BigInt::from(-1)
            } else {
                BigInt::from(1)
            }
        });
        suite.check(
            "autw_a_sign_diagonals",
            format!("mask={mask}"),
            is_semilinear(&signs, &identity_w)?,
            None,
        );
    }
    suite.check(
        "commutant_diagonal",
        format!("n={n}"),
        commutant_is_diagonal(n),
        Some("every integral matrix commuting with the whole diagonal action is diagonal".to_string()),
    );

    for sigma in Permutation::generating_set(n) {
        let section = sn_section(&sigma);
        suite.check(
            "semilinear_permutation_section",
            format!("sigma={sigma}"),
            is_semilinear(&section.matrix, &section.w_map)?,
            None,
        );
    }
    for sample in 0..15 {
        let phi = rand_autoword(&mut rng, n, 4).evaluate()?;
        let pair = induced_pair(&phi)?;
        suite.check(
            "induced_pair_semilinear",
            format!("sample={sample}"),
            is_semilinear(&pair.matrix, &pair.w_map)?,
            None,
        );
    }
    {
        let swap = Permutation::transposition(n, 1, 2)?;
        let section = sn_section(&swap);
        suite.check(
            "semilinear_mismatch_rejected",
            "sigma=[2,1,...] with identity on the quotient".to_string(),
            !is_semilinear(&section.matrix, &identity_w)?,
            Some("a permutation matrix is not compatible with the identity on the quotient".to_string()),
        );
    }

    let gens = Permutation::generating_set(n);
    for sigma in &gens {
        for tau in &gens {
            let left = sn_section(sigma);
            let right = sn_section(tau);
            let composed = sn_section(&sigma.compose(tau)?);
            let pass = left.matrix.mul(&right.matrix)? == composed.matrix
                && left.w_map.compose(&right.w_map)? == composed.w_map;
            suite.check(
                "sn_section_homomorphism",
                format!("sigma={sigma},tau={tau}"),
                pass,
                None,
            );
        }
    }

    for sample in 0..30 {
        let a = rand_unit(&mut rng, n, 4);
        let pass =
            a.to_endomorphism().induced_matrix()?.is_identity() == a.has_zero_diagonal();
        suite.check(
            "aut0_zero_diagonal",
            format!("sample={sample}"),
            pass,
            None,
        );
    }

    for sample in 0..20 {
        // Compositions of Fouxe-Rabinovitch automorphisms leave every
        // sign vector unchanged.
        let mut f = WAutomorphism::identity(n);
        for _ in 0..rand_int(&mut rng, 1, 4) {
            let (i, j) = rand_pair(&mut rng, n);
            f = f.compose(&WAutomorphism::fouxe_rabinovitch(n, i, j)?)?;
        }
        let w = rand_word(&mut rng, n, 6);
        let pass = f.apply(&w)?.sign_vector() == w.sign_vector();
        suite.check("fr_fixes_signs", format!("sample={sample}"), pass, None);
    }

    for sample in 0..20 {
        let z = rand_vector(&mut rng, n, 3);
        let pass = GEndomorphism::inner(&embed_a(z.clone()))
            .translation_part()
            .as_ref()
            == Some(&iota(&z));
        suite.check(
            "inner_translation_iota",
            format!("sample={sample},z={z}"),
            pass,
            None,
        );
    }

    // Units outside the embedded lattice are not conjugations.
    {
        let eps = TranslationMatrix::eps(n, 1, 2)?;
        suite.check(
            "non_inner_unit_no_witness",
            "a=eps[1,2]".to_string(),
            eps.to_endomorphism().inner_witness(2, 2)?.is_none(),
            None,
        );
        let delta = TranslationMatrix::delta(n, 1)?;
        suite.check(
            "non_inner_unit_no_witness",
            "a=delta[1]".to_string(),
            delta.to_endomorphism().inner_witness(2, 2)?.is_none(),
            None,
        );
    }

    {
        let letters: Vec<ReducedWord> = (1..=n)
            .map(|i| ReducedWord::generator(n, i).expect("in range"))
            .collect();
        suite.check(
            "fixed_sublattice_trivial",
            format!("n={n}"),
            fixed_sublattice(n, &letters)?.is_empty(),
            None,
        );
    }

    {
        let (free, torsion) = h1_w(n)?;
        let pass = free == n * (n - 2)
            && torsion.len() == n
            && torsion.iter().all(|f| *f == BigInt::from(2));
        suite.check(
            "h1_expected",
            format!("n={n}"),
            pass,
            Some(format!("free rank {free}, torsion {:?}", torsion.len())),
        );
    }
    {
        let summands = h2_w(n)?;
        let pass = summands.len() == n
            && summands
                .iter()
                .all(|s| s.len() == 1 && s[0] == BigInt::from(2));
        suite.check("h2_expected", format!("n={n}"), pass, None);
    }
    {
        let classes = torsion_free_classes(n);
        let class = extension_class(n)?;
        let pass = classes.len() == 1 && classes[0] == class && class.is_torsion_free();
        suite.check(
            "extension_class_unique",
            format!("n={n}"),
            pass,
            Some(format!("class {class}")),
        );
    }

    // Negative control: a single generator does fix part of the
    // lattice, so the claim that it fixes nothing must fail.
    {
        let single = [ReducedWord::generator(n, 1)?];
        suite.check(
            "negative_single_generator_fixes_nothing",
            "w=x1".to_string(),
            !fixed_sublattice(n, &single)?.is_empty(),
            Some("mutated claim: one generator alone has a fixed line".to_string()),
        );
    }

    Ok(suite.finish())
}

/// Runs every suite at the given rank and seed. Reports are
/// deterministic: byte-identical serializations for equal inputs.
pub fn run_all(n: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    require_rank(n, 3)?;
    Ok(alloc::vec![
        suite_autw(n, seed)?,
        suite_monoid(n, seed)?,
        suite_autg(n, seed)?,
        suite_outg(n, seed)?,
        suite_structure(n, seed)?,
    ])
}
