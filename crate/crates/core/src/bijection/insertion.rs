use serde::Serialize;

use super::{split_lr, BijectionError, Half, SplitRule};
use crate::paths::{DyckPath, SlopeDecomposition, Step, WeightedDyckPath};
use crate::perm::PartialWord;

/// Static data about each up step of a path under a split rule.
#[derive(Clone, Copy, Debug)]
pub(crate) struct UpStep {
    /// 1-based position in the path.
    pub pos: usize,
    pub slope: usize,
    pub first: bool,
    pub last: bool,
    /// Down steps strictly before this step's slope.
    pub shift: usize,
    pub half: Half,
    pub lower_height: usize,
}

/// Everything `ins` needs that does not depend on the weights.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub decomp: SlopeDecomposition,
    /// Up steps in insertion order.
    pub ups: Vec<UpStep>,
    /// `up_index[i]` is the index into `ups` of the step at 0-based `i`.
    pub up_index: Vec<Option<usize>>,
}

impl Layout {
    pub fn new(path: &DyckPath, rule: SplitRule) -> Layout {
        let decomp = SlopeDecomposition::of(path);
        let split = split_lr(&decomp, rule);
        let heights = path.heights();
        let mut ups = Vec::with_capacity(path.semilength());
        let mut up_index = vec![None; path.len()];
        let mut shift = 0;
        for (s, slope) in decomp.up.iter().enumerate() {
            if s > 0 {
                shift += decomp.down[s - 1].len;
            }
            for pos in slope.start..=slope.end() {
                up_index[pos - 1] = Some(ups.len());
                ups.push(UpStep {
                    pos,
                    slope: s,
                    first: pos == slope.start,
                    last: pos == slope.end(),
                    shift,
                    half: split.membership[s],
                    lower_height: heights[pos - 1],
                });
            }
        }
        Layout {
            decomp,
            ups,
            up_index,
        }
    }

    /// The extremal weight that makes an up step jump: the minimum for `L`,
    /// the maximum for `R`.
    ///
    /// Only reads weights up to the step after `up`, so it may be called on
    /// a partially assigned weight vector.
    pub fn bound(&self, up: &UpStep, half: Half, weights: &[usize]) -> usize {
        match half {
            Half::L if !up.first => weights[up.pos - 2],
            Half::L => match up.slope.checked_sub(1) {
                None => 0,
                Some(v) => {
                    let valley = &self.decomp.valleys[v];
                    valley.height.saturating_sub(weights[valley.after - 1])
                }
            },
            Half::R if !up.last => up.lower_height.min(weights[up.pos]),
            Half::R => {
                let peak = &self.decomp.peaks[up.slope];
                up.lower_height
                    .min(peak.height.saturating_sub(weights[peak.after]))
            }
        }
    }

    /// Jump flag and, when not jumping, the distance from the right end of
    /// the working word (possibly negative on invalid input).
    pub fn decide(&self, up: &UpStep, weights: &[usize]) -> (bool, isize) {
        let w = weights[up.pos - 1];
        if w == self.bound(up, up.half, weights) {
            return (true, 0);
        }
        let dist = match up.half {
            Half::L => w as isize + up.shift as isize - 1,
            Half::R => (w + up.shift) as isize,
        };
        (false, dist)
    }
}

/// One up step of an `ins` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionStep {
    pub position: usize,
    pub weight: usize,
    pub slope_index: usize,
    pub half: Half,
    pub shift: usize,
    pub jumped: bool,
    /// Letters left to the right of the inserted one; `None` for a jump.
    pub distance: Option<usize>,
    pub word_after: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InsertionTrace {
    pub steps: Vec<InsertionStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overflow {
    pub step: usize,
    pub distance: isize,
    pub word_len: usize,
    pub trace: InsertionTrace,
}

fn run(
    wd: &WeightedDyckPath,
    rule: SplitRule,
    mut trace: Option<&mut InsertionTrace>,
) -> Result<Vec<usize>, BijectionError> {
    if !wd.is_irreducible() {
        return Err(BijectionError::NotIrreducible);
    }
    let layout = Layout::new(wd.path(), rule);
    let weights = wd.weights();
    let mut word: Vec<usize> = Vec::with_capacity(layout.ups.len());
    for up in &layout.ups {
        let (jumped, dist) = layout.decide(up, weights);
        let at = if jumped {
            0
        } else if dist < 0 || dist as usize > word.len() {
            return Err(BijectionError::InsertionOverflow(Box::new(Overflow {
                step: up.pos,
                distance: dist,
                word_len: word.len(),
                trace: trace.map(|t| t.clone()).unwrap_or_default(),
            })));
        } else {
            word.len() - dist as usize
        };
        word.insert(at, up.pos);
        if let Some(t) = trace.as_deref_mut() {
            t.steps.push(InsertionStep {
                position: up.pos,
                weight: weights[up.pos - 1],
                slope_index: up.slope,
                half: up.half,
                shift: up.shift,
                jumped,
                distance: (!jumped).then_some(dist as usize),
                word_after: word.clone(),
            });
        }
    }
    Ok(word)
}

/// Builds the bottom word of an irreducible weighted path: the positions of
/// its up steps, inserted one at a time.
pub fn ins(
    wd: &WeightedDyckPath,
    rule: SplitRule,
) -> Result<(PartialWord, InsertionTrace), BijectionError> {
    let mut trace = InsertionTrace::default();
    let word = run(wd, rule, Some(&mut trace))?;
    let word = PartialWord::new(word, wd.len()).expect("up positions are distinct and in range");
    Ok((word, trace))
}

/// `ins` without the trace.
pub(crate) fn ins_word(
    wd: &WeightedDyckPath,
    rule: SplitRule,
) -> Result<Vec<usize>, BijectionError> {
    run(wd, rule, None)
}

fn up_step(wd: &WeightedDyckPath, u: usize) -> Result<(Layout, UpStep), BijectionError> {
    if wd.path().step(u) != Some(Step::Up) {
        return Err(BijectionError::NotAnUpStep(u));
    }
    let layout = Layout::new(wd.path(), SplitRule::default());
    let up = layout.ups[layout.up_index[u - 1].expect("checked up step")];
    Ok((layout, up))
}

/// The jump threshold of up step `u` when its slope belongs to `half`.
pub fn jump_bound(wd: &WeightedDyckPath, u: usize, half: Half) -> Result<usize, BijectionError> {
    let (layout, up) = up_step(wd, u)?;
    Ok(layout.bound(&up, half, wd.weights()))
}

pub fn jumps(wd: &WeightedDyckPath, u: usize, half: Half) -> Result<bool, BijectionError> {
    let (layout, up) = up_step(wd, u)?;
    Ok(wd.weights()[u - 1] == layout.bound(&up, half, wd.weights()))
}
