use super::{DyckPath, Step};

/// A maximal run of steps in one direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    pub kind: Step,
    /// 1-based position of the first step of the run.
    pub start: usize,
    pub len: usize,
}

impl Slope {
    /// 1-based position of the last step of the run.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    pub fn contains(&self, u: usize) -> bool {
        u >= self.start && u <= self.end()
    }
}

/// A peak or valley: the point between steps `after` and `after + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Apex {
    pub after: usize,
    pub height: usize,
    /// Weight of step `after`, when weights are known.
    pub left_weight: Option<usize>,
    /// Weight of step `after + 1`, when weights are known.
    pub right_weight: Option<usize>,
}

/// Alternating up/down runs of a path with the peak between each up run and
/// the following down run, and the valley between each down run and the
/// following up run.
///
/// `peaks[i]` closes `up[i]`; `valleys[i]` opens `up[i + 1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SlopeDecomposition {
    pub up: Vec<Slope>,
    pub down: Vec<Slope>,
    pub peaks: Vec<Apex>,
    pub valleys: Vec<Apex>,
}

impl SlopeDecomposition {
    pub fn of(path: &DyckPath) -> Self {
        Self::with_weights(path, None)
    }

    pub fn with_weights(path: &DyckPath, weights: Option<&[usize]>) -> Self {
        let steps = path.steps();
        let h = path.heights();
        let mut out = SlopeDecomposition::default();
        let mut i = 0;
        while i < steps.len() {
            let kind = steps[i];
            let start = i;
            while i < steps.len() && steps[i] == kind {
                i += 1;
            }
            let slope = Slope {
                kind,
                start: start + 1,
                len: i - start,
            };
            match kind {
                Step::Up => out.up.push(slope),
                Step::Down => out.down.push(slope),
            }
            if i < steps.len() {
                let apex = Apex {
                    after: i,
                    height: h[i],
                    left_weight: weights.map(|w| w[i - 1]),
                    right_weight: weights.map(|w| w[i]),
                };
                match kind {
                    Step::Up => out.peaks.push(apex),
                    Step::Down => out.valleys.push(apex),
                }
            }
        }
        out
    }

    pub fn slope_count(&self) -> usize {
        self.up.len()
    }

    /// Index of the up run containing the 1-based step `u`.
    pub fn up_slope_of(&self, u: usize) -> Option<usize> {
        self.up.iter().position(|s| s.contains(u))
    }

    /// Index of the down run containing the 1-based step `u`.
    pub fn down_slope_of(&self, u: usize) -> Option<usize> {
        self.down.iter().position(|s| s.contains(u))
    }
}
