//! Preimages under the bijection.
//!
//! The underlying path is read off the bottom letters. Weights are then
//! searched depth first, left to right. Each up step's insertion is replayed
//! as soon as its jump decision is determined (at its own weight in the left
//! half, at the next step's weight in the right half) and the branch is cut
//! unless the new letter lands where the target bottom word puts it relative
//! to the letters already inserted. Complete weightings are finally checked
//! against the top word.

use std::collections::HashMap;

use thiserror::Error;

use super::{beta, ins_word, BijectionError, Half, Layout, SplitRule};
use crate::paths::enumerate::weight_range;
use crate::paths::{DyckPath, WeightedDyckPath, Weightings};
use crate::perm::{schutzenberger_word, standardize, Permutation};

/// Default size cap for [`invert_brute`].
pub const DEFAULT_BRUTE_CAP: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NotInImage {
    #[error("not up-down (descent set {0:?})")]
    NotUpDown(Vec<usize>),
    #[error("contains the pattern 1234")]
    Contains1234,
    #[error("bottom letters do not mark the up steps of a Dyck path")]
    BotNotDyck,
    #[error("letters do not split into blocks matching the irreducible factors")]
    FactorBlocks,
    #[error("no weighting reproduces the permutation")]
    SearchExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvertError {
    #[error("not in image: {0}")]
    NotInImage(#[from] NotInImage),
    #[error("internal error: {} distinct preimages", .0.len())]
    Ambiguous(Vec<WeightedDyckPath>),
    #[error("size {n} exceeds the brute-force cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

fn underlying_path(sigma: &Permutation) -> Result<DyckPath, InvertError> {
    let s = sigma.as_slice();
    if s.len() % 2 == 1 {
        return Err(NotInImage::NotUpDown(sigma.descent_set()).into());
    }
    let bot: Vec<usize> = s.iter().step_by(2).copied().collect();
    DyckPath::from_up_positions(s.len(), &bot).map_err(|_| NotInImage::BotNotDyck.into())
}

/// The unique weighted path whose image is `sigma`.
pub fn invert(sigma: &Permutation, rule: SplitRule) -> Result<WeightedDyckPath, InvertError> {
    if !sigma.is_up_down() {
        return Err(NotInImage::NotUpDown(sigma.descent_set()).into());
    }
    if !sigma.avoids_1234() {
        return Err(NotInImage::Contains1234.into());
    }
    let path = underlying_path(sigma)?;
    let s = sigma.as_slice();
    let total = s.len();
    let mut weights = Vec::with_capacity(total);
    for r in path.factor_ranges() {
        // factor r holds values r.start+1..=r.end in the block that sits at
        // the same distance from the right end of sigma
        let block = &s[total - r.end..total - r.start];
        if block.iter().any(|&v| v <= r.start || v > r.end) {
            return Err(NotInImage::FactorBlocks.into());
        }
        let local = standardize(block);
        let factor = DyckPath::from_steps_unchecked(path.steps()[r].to_vec());
        let found = search_factor(&factor, local.as_slice(), rule);
        match found.len() {
            0 => return Err(NotInImage::SearchExhausted.into()),
            1 => weights.extend_from_slice(&found[0]),
            _ => {
                return Err(InvertError::Ambiguous(
                    found
                        .into_iter()
                        .map(|w| WeightedDyckPath::from_parts_unchecked(factor.clone(), w))
                        .collect(),
                ))
            }
        }
    }
    let wd = WeightedDyckPath::from_parts_unchecked(path, weights);
    debug_assert_eq!(
        beta(&wd, rule).ok().map(|p| p.into_perm()).as_ref(),
        Some(sigma)
    );
    Ok(wd)
}

struct Search<'a> {
    steps: &'a [crate::paths::Step],
    heights: Vec<usize>,
    layout: Layout,
    /// Index of each letter in the target bottom word.
    rank: Vec<usize>,
    mirrored: WeightedDyckPath,
    mirrored_target: Vec<usize>,
    rule: SplitRule,
    weights: Vec<usize>,
    word: Vec<usize>,
    found: Vec<Vec<usize>>,
}

/// All weightings of an irreducible path whose image is the standardized
/// block `target`; the search stops after two hits.
fn search_factor(path: &DyckPath, target: &[usize], rule: SplitRule) -> Vec<Vec<usize>> {
    let len = path.len();
    let mut rank = vec![usize::MAX; len + 1];
    for (i, &v) in target.iter().step_by(2).enumerate() {
        rank[v] = i;
    }
    let top: Vec<usize> = target.iter().skip(1).step_by(2).copied().collect();
    let mut search = Search {
        steps: path.steps(),
        heights: path.heights(),
        layout: Layout::new(path, rule),
        rank,
        mirrored: WeightedDyckPath::from_parts_unchecked(path.reflect(), vec![0; len]),
        mirrored_target: schutzenberger_word(&top, len).expect("block letters lie in 1..=len"),
        rule,
        weights: vec![0; len],
        word: Vec::with_capacity(len / 2),
        found: Vec::new(),
    };
    search.descend(0);
    search.found
}

impl Search<'_> {
    fn descend(&mut self, i: usize) {
        if self.found.len() > 1 {
            return;
        }
        if i == self.steps.len() {
            self.check_top();
            return;
        }
        let prev = i.checked_sub(1).map(|j| self.weights[j]);
        let (lo, hi) = weight_range(self.steps, &self.heights, i, prev);
        for w in lo..=hi {
            self.weights[i] = w;
            let decided = self.decided_at(i);
            match decided {
                Some(k) => {
                    if let Some(at) = self.placement(k) {
                        self.word.insert(at, self.layout.ups[k].pos);
                        self.descend(i + 1);
                        self.word.remove(at);
                    }
                }
                None => self.descend(i + 1),
            }
        }
    }

    /// The up step whose jump decision becomes known once step `i` is set.
    fn decided_at(&self, i: usize) -> Option<usize> {
        if let Some(k) = self.layout.up_index[i] {
            if self.layout.ups[k].half == Half::L {
                return Some(k);
            }
        }
        let k = self.layout.up_index[i.checked_sub(1)?]?;
        (self.layout.ups[k].half == Half::R).then_some(k)
    }

    /// Insertion index of up step `k`, if it agrees with the target order.
    fn placement(&self, k: usize) -> Option<usize> {
        let up = &self.layout.ups[k];
        let (jumped, dist) = self.layout.decide(up, &self.weights);
        let at = if jumped {
            0
        } else {
            let d = usize::try_from(dist)
                .ok()
                .filter(|d| *d <= self.word.len())?;
            self.word.len() - d
        };
        let r = self.rank[up.pos];
        let expected = self.word.iter().filter(|&&v| self.rank[v] < r).count();
        (at == expected).then_some(at)
    }

    fn check_top(&mut self) {
        let mirrored_weights: Vec<usize> = self.weights.iter().rev().copied().collect();
        let mirrored =
            WeightedDyckPath::from_parts_unchecked(self.mirrored.path().clone(), mirrored_weights);
        if let Ok(word) = ins_word(&mirrored, self.rule) {
            if word == self.mirrored_target {
                self.found.push(self.weights.clone());
            }
        }
    }
}

/// Images of every weighting of one path, for repeated brute-force lookups.
#[derive(Clone, Debug)]
pub struct BruteIndex {
    path: DyckPath,
    images: HashMap<Permutation, Vec<WeightedDyckPath>>,
}

impl BruteIndex {
    pub fn new(path: DyckPath, rule: SplitRule) -> Result<Self, BijectionError> {
        let mut images: HashMap<Permutation, Vec<WeightedDyckPath>> = HashMap::new();
        for wd in Weightings::new(path.clone()) {
            images
                .entry(beta(&wd, rule)?.into_perm())
                .or_default()
                .push(wd);
        }
        Ok(BruteIndex { path, images })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// The weightings of this path whose image is `sigma`; must be exactly one.
    pub fn lookup(&self, sigma: &Permutation) -> Result<WeightedDyckPath, InvertError> {
        if underlying_path(sigma)? != self.path {
            return Err(NotInImage::SearchExhausted.into());
        }
        match self.images.get(sigma).map(Vec::as_slice) {
            None | Some([]) => Err(NotInImage::SearchExhausted.into()),
            Some([wd]) => Ok(wd.clone()),
            Some(hits) => Err(InvertError::Ambiguous(hits.to_vec())),
        }
    }
}

/// Oracle inverse: tries every valid weighting of the path read off the
/// bottom letters.
pub fn invert_brute(
    sigma: &Permutation,
    cap: usize,
    rule: SplitRule,
) -> Result<WeightedDyckPath, InvertError> {
    let n = sigma.len() / 2;
    if n > cap {
        return Err(InvertError::TooLarge { n, cap });
    }
    BruteIndex::new(underlying_path(sigma)?, rule)?.lookup(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(s: &str) -> Result<String, InvertError> {
        invert(&s.parse().unwrap(), SplitRule::CeilHalf).map(|w| w.to_string())
    }

    fn brute(s: &str) -> Result<String, InvertError> {
        invert_brute(&s.parse().unwrap(), DEFAULT_BRUTE_CAP, SplitRule::CeilHalf)
            .map(|w| w.to_string())
    }

    #[test]
    fn worked_example_inverts() {
        assert_eq!(
            inv("8,13,6,12,11,14,7,10,2,9,4,5,1,3").unwrap(),
            "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0"
        );
    }

    #[test]
    fn small_inverses() {
        assert_eq!(inv("1,2").unwrap(), "UD;0,0");
        assert_eq!(inv("3,4,1,2").unwrap(), "UDUD;0,0,0,0");
        assert_eq!(inv("").unwrap(), ";");
        assert_eq!(brute("5,6,2,4,1,3").unwrap(), "UUDDUD;0,0,0,0,0,0");
        assert_eq!(brute("2,4,1,3").unwrap(), "UUDD;0,0,0,0");
        assert_eq!(inv("5,6,2,4,1,3").unwrap(), "UUDDUD;0,0,0,0,0,0");
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            inv("2,1"),
            Err(InvertError::NotInImage(NotInImage::NotUpDown(_)))
        ));
        assert!(matches!(
            inv("1,2,3"),
            Err(InvertError::NotInImage(NotInImage::NotUpDown(_)))
        ));
        assert_eq!(
            inv("1,3,2,5,4,7,6,8"),
            Err(InvertError::NotInImage(NotInImage::Contains1234))
        );
        // the oracle skips the shape checks; bottom letter 2 puts a down step first
        assert_eq!(
            brute("2,1"),
            Err(InvertError::NotInImage(NotInImage::BotNotDyck))
        );
        assert!(matches!(
            invert_brute(&"1,2".parse().unwrap(), 0, SplitRule::CeilHalf),
            Err(InvertError::TooLarge { n: 1, cap: 0 })
        ));
    }

    #[test]
    fn a6_list_inverts_to_distinct_paths() {
        let list = "143625 153624 154623 163524 164523 241635 243615 251436 251634 253614 \
                    254613 261435 261534 263514 264513 341625 342615 351426 351624 352416 \
                    352614 354612 361425 361524 362415 362514 364512 451326 451623 452316 \
                    452613 453612 461325 461523 462315 462513 463512 561324 561423 562314 \
                    562413 563412";
        let mut seen = std::collections::HashSet::new();
        for s in list.split_whitespace() {
            let v: Vec<usize> = s
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect();
            let sigma = Permutation::new(v).unwrap();
            let wd = invert_brute(&sigma, DEFAULT_BRUTE_CAP, SplitRule::CeilHalf).unwrap();
            assert_eq!(invert(&sigma, SplitRule::CeilHalf).unwrap(), wd);
            assert!(seen.insert(wd));
        }
        assert_eq!(seen.len(), 42);
    }
}
