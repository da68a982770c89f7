//! Exact arithmetic for combinatorial Hantzsche-Wendt groups.
//!
//! The group `G_n` is presented on generators `x_1, ..., x_n` with the
//! relators `x_i^-1 x_j^2 x_i x_j^2` for all `i != j`. The squares of
//! the generators span a normal free abelian subgroup `A_n` of rank
//! `n`, and the quotient `W_n` is the free product of `n` copies of the
//! group of order two. This crate implements:
//!
//! - unique normal forms and exact arithmetic in `G_n` ([`group`]),
//! - reduced words in `W_n` and its automorphisms ([`word`]),
//! - the lattice `A_n` with integer linear algebra, including Smith
//!   normal form ([`lattice`]),
//! - the monoid of translation endomorphisms with its unit group
//!   ([`monoid`]),
//! - automorphisms of `G_n` as certified generator words ([`auto`]),
//! - cohomology invariants of the extension ([`cohomology`]),
//! - machine-checked verification suites with deterministic reports
//!   ([`verify`]).
//!
//! All integer arithmetic is arbitrary precision. Every value is
//! immutable after construction and safe to share across threads.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod auto;
pub mod cohomology;
pub mod error;
pub mod group;
pub mod lattice;
pub mod monoid;
pub mod verify;
pub mod word;

pub use auto::{AutoLetter, AutoToken, AutoWord, GEndomorphism, SemiLinearPair};
pub use cohomology::CohClass;
pub use error::{Error, Result};
pub use group::{GroupElement, Sign};
pub use lattice::{IntMatrix, LatticeVector, SnfResult};
pub use monoid::TranslationMatrix;
pub use verify::{CheckResult, SuiteReport};
pub use word::{Permutation, ReducedWord, WAutomorphism};
