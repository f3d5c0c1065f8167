//! Weighted Dyck paths, 1234-avoiding up-down permutations, and an
//! insertion bijection between the two families.
//!
//! Both families are counted by the three-dimensional Catalan numbers
//! `1, 1, 5, 42, 462, 6006, 87516, 1385670, ...`. The map [`beta`] sends a
//! weighted Dyck path of length `2n` to an up-down permutation of size `2n`
//! whose bottom letters are the positions of the path's up steps.

pub mod bijection;
pub mod paths;
pub mod perm;
pub mod verify;

pub use bijection::{beta, beta_irreducible, ins, invert, invert_brute, SplitRule};
pub use paths::{DyckPath, Step, WeightedDyckPath};
pub use perm::{AlternatingPermutation, Permutation};

/// The three-dimensional Catalan numbers for `n = 0..=7`.
pub const REFERENCE_COUNTS: [u64; 8] = [1, 1, 5, 42, 462, 6006, 87516, 1385670];
