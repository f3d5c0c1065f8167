//! The map from weighted Dyck paths to 1234-avoiding up-down permutations,
//! its inverse, and the single-slope transformation onto non-decreasing
//! parking functions.
//!
//! For an irreducible path the bottom word is built by [`ins`], which scans
//! the up steps left to right and inserts each step's position into a
//! working word. The top word is `S_2n(ins(reflect(wd)))`. Reducible paths
//! are handled factor by factor and glued with the shifted concatenation
//! product, last factor leftmost.

mod beta;
mod insertion;
mod inverse;
mod parking;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::paths::SlopeDecomposition;
use crate::perm::PermError;

pub use beta::{beta, beta_irreducible};
pub use insertion::{ins, jump_bound, jumps, InsertionStep, InsertionTrace, Overflow};
pub use inverse::{invert, invert_brute, BruteIndex, InvertError, NotInImage, DEFAULT_BRUTE_CAP};
pub use parking::{parking_functions, parking_to_123avoiding, to_single_slope, ParkingFunction};

pub(crate) use insertion::{ins_word, Layout};

/// How the up slopes are divided between the left half `L` and the right
/// half `R`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitRule {
    /// `L` is the first `ceil(k/2)` of the `k` up slopes.
    #[default]
    #[serde(rename = "ceil")]
    CeilHalf,
    /// `L` is the first `floor(k/2)` up slopes.
    #[serde(rename = "floor")]
    FloorHalf,
}

impl SplitRule {
    pub fn left_count(self, k: usize) -> usize {
        match self {
            SplitRule::CeilHalf => k.div_ceil(2),
            SplitRule::FloorHalf => k / 2,
        }
    }
}

impl fmt::Display for SplitRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitRule::CeilHalf => "ceil",
            SplitRule::FloorHalf => "floor",
        })
    }
}

impl FromStr for SplitRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ceil" => Ok(SplitRule::CeilHalf),
            "floor" => Ok(SplitRule::FloorHalf),
            other => Err(format!(
                "unknown split rule {other:?} (expected ceil or floor)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Half {
    L,
    R,
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Half::L => "L",
            Half::R => "R",
        })
    }
}

/// Membership of each up slope; the `L` slopes always form a prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitAssignment {
    pub membership: Vec<Half>,
    pub rule: SplitRule,
}

impl SplitAssignment {
    pub fn left_count(&self) -> usize {
        self.membership
            .iter()
            .take_while(|h| **h == Half::L)
            .count()
    }
}

pub fn split_lr(decomp: &SlopeDecomposition, rule: SplitRule) -> SplitAssignment {
    let k = decomp.up.len();
    let left = rule.left_count(k);
    SplitAssignment {
        membership: (0..k)
            .map(|i| if i < left { Half::L } else { Half::R })
            .collect(),
        rule,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("path is not irreducible")]
    NotIrreducible,
    #[error("step {0} is not an up step")]
    NotAnUpStep(usize),
    #[error("insertion overflow at step {}: distance {} outside 0..={}", .0.step, .0.distance, .0.word_len)]
    InsertionOverflow(Box<Overflow>),
    #[error("internal inconsistency: bottom {bot:?} and top {top:?} do not assemble: {source}")]
    Inconsistent {
        bot: Vec<usize>,
        top: Vec<usize>,
        source: PermError,
    },
    #[error("not a non-decreasing parking function: {0:?}")]
    NotParking(Vec<usize>),
}
