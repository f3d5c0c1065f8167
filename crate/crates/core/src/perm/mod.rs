//! Permutations in one-line notation, words over `{1..N}`, and the up-down
//! permutations avoiding 1234.

mod criteria;
mod enumerate;
mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use criteria::{criteria_borie, CriteriaBreakdown};
pub use enumerate::UpDownAvoiders;
pub use word::{avoids_123, lis_length, standardize, PartialWord};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid letter {0:?}")]
    InvalidLetter(String),
    #[error("letter {letter} repeated or outside 1..={ambient}")]
    BadWordLetter { letter: usize, ambient: usize },
    #[error("odd size {0}")]
    OddSize(usize),
    #[error("bottom and top words have lengths {bot} and {top}")]
    HalfLengthMismatch { bot: usize, top: usize },
    #[error("not up-down: descent set is {0:?}")]
    NotUpDown(Vec<usize>),
}

/// A permutation of `{1..N}` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, PermError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub(crate) fn from_vec_unchecked(one_line: Vec<usize>) -> Self {
        Permutation(one_line)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based positions `i` with `p_i > p_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Even size with descents exactly at the even positions.
    pub fn is_up_down(&self) -> bool {
        self.0.len().is_multiple_of(2)
            && self
                .0
                .windows(2)
                .enumerate()
                .all(|(i, w)| (w[0] < w[1]) == (i % 2 == 0))
    }

    pub fn lis_length(&self) -> usize {
        lis_length(&self.0)
    }

    pub fn avoids_1234(&self) -> bool {
        self.lis_length() <= 3
    }

    /// Complement the values then reverse the reading order.
    pub fn schutzenberger(&self) -> Permutation {
        let n = self.0.len();
        Permutation(self.0.iter().rev().map(|v| n + 1 - v).collect())
    }

    /// `self • other`: the letters of `self` raised by `other.len()`, then
    /// `other` unchanged.
    pub fn shifted_concat(&self, other: &Permutation) -> Permutation {
        let k = other.len();
        let mut v: Vec<usize> = self.0.iter().map(|x| x + k).collect();
        v.extend_from_slice(&other.0);
        Permutation(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[usize]) -> fmt::Result {
    for (i, v) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub(crate) fn parse_letters(s: &str) -> Result<Vec<usize>, PermError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            let x = x.trim();
            x.parse::<usize>()
                .map_err(|_| PermError::InvalidLetter(x.to_string()))
        })
        .collect()
}

/// Comma-separated one-line notation, e.g. `3,6,4,5,1,2`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        Permutation::new(parse_letters(s)?)
    }
}

/// Applies the Schützenberger involution to a word over `{1..ambient}`.
pub fn schutzenberger_word(letters: &[usize], ambient: usize) -> Result<Vec<usize>, PermError> {
    letters
        .iter()
        .rev()
        .map(|&v| {
            if v == 0 || v > ambient {
                Err(PermError::BadWordLetter { letter: v, ambient })
            } else {
                Ok(ambient + 1 - v)
            }
        })
        .collect()
}

/// An up-down permutation `σ1 < σ2 > σ3 < ... > σ(2n-1) < σ(2n)`.
///
/// The bottom word holds the odd-position letters and the top word the
/// even-position letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlternatingPermutation(Permutation);

impl AlternatingPermutation {
    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn bot(&self) -> Vec<usize> {
        self.0 .0.iter().step_by(2).copied().collect()
    }

    pub fn top(&self) -> Vec<usize> {
        self.0 .0.iter().skip(1).step_by(2).copied().collect()
    }

    pub fn avoids_1234(&self) -> bool {
        self.0.avoids_1234()
    }

    pub fn schutzenberger(&self) -> AlternatingPermutation {
        AlternatingPermutation(self.0.schutzenberger())
    }

    pub fn shifted_concat(&self, other: &AlternatingPermutation) -> AlternatingPermutation {
        AlternatingPermutation(self.0.shifted_concat(&other.0))
    }
}

impl TryFrom<Permutation> for AlternatingPermutation {
    type Error = PermError;

    fn try_from(p: Permutation) -> Result<Self, PermError> {
        if p.len() % 2 == 1 {
            return Err(PermError::OddSize(p.len()));
        }
        if !p.is_up_down() {
            return Err(PermError::NotUpDown(p.descent_set()));
        }
        Ok(AlternatingPermutation(p))
    }
}

impl fmt::Display for AlternatingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Interleaves a bottom word (odd positions) and a top word (even
/// positions) into an up-down permutation.
pub fn assemble(bot: &[usize], top: &[usize]) -> Result<AlternatingPermutation, PermError> {
    if bot.len() != top.len() {
        return Err(PermError::HalfLengthMismatch {
            bot: bot.len(),
            top: top.len(),
        });
    }
    let mut v = Vec::with_capacity(2 * bot.len());
    for (b, t) in bot.iter().zip(top) {
        v.push(*b);
        v.push(*t);
    }
    AlternatingPermutation::try_from(Permutation::new(v)?)
}

/// Line-delimited record form `{"perm":[1,2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermRecord {
    pub perm: Vec<usize>,
}

impl From<&Permutation> for PermRecord {
    fn from(p: &Permutation) -> Self {
        PermRecord { perm: p.0.clone() }
    }
}
