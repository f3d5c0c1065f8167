use crate::bijection::{BijectionError, Half, Overflow, SplitRule};
use crate::paths::{SlopeDecomposition, WeightedDyckPath};
use crate::perm::PartialWord;

/// The top word computed on the path itself: down slopes are scanned right
/// to left, the rightmost half plays the role of `L`, distances are counted
/// from the left end and jumping steps are appended on the right.
pub fn topword_direct(
    wd: &WeightedDyckPath,
    rule: SplitRule,
) -> Result<PartialWord, BijectionError> {
    if !wd.is_irreducible() {
        return Err(BijectionError::NotIrreducible);
    }
    let w = wd.weights();
    let h = wd.heights();
    let d = SlopeDecomposition::of(wd.path());
    let k = d.down.len();
    let left = rule.left_count(k);
    let mut word: Vec<usize> = Vec::with_capacity(wd.semilength());
    // up steps to the right of the current down slope
    let mut shift = 0;
    for (scan, s) in (0..k).rev().enumerate() {
        let slope = d.down[s];
        if scan > 0 {
            shift += d.up[s + 1].len;
        }
        let half = if scan < left { Half::L } else { Half::R };
        for pos in (slope.start..=slope.end()).rev() {
            let weight = w[pos - 1];
            let lower = h[pos];
            let bound = match half {
                Half::L if pos != slope.end() => w[pos],
                Half::L => d
                    .valleys
                    .get(s)
                    .map_or(0, |v| v.height.saturating_sub(w[v.after])),
                Half::R if pos != slope.start => lower.min(w[pos - 2]),
                Half::R => {
                    let peak = d.peaks[s];
                    lower.min(peak.height.saturating_sub(w[peak.after - 1]))
                }
            };
            if weight == bound {
                word.push(pos);
                continue;
            }
            let dist = match half {
                Half::L => weight as isize + shift as isize - 1,
                Half::R => (weight + shift) as isize,
            };
            if dist < 0 || dist as usize > word.len() {
                return Err(BijectionError::InsertionOverflow(Box::new(Overflow {
                    step: pos,
                    distance: dist,
                    word_len: word.len(),
                    trace: Default::default(),
                })));
            }
            word.insert(dist as usize, pos);
        }
    }
    Ok(PartialWord::new(word, wd.len()).expect("down positions are distinct and in range"))
}
