use std::collections::HashMap;

use num_bigint::BigUint;

use super::{DyckPath, Step, WeightedDyckPath};

/// All Dyck paths of semilength `n` in lexicographic order with `U < D`.
pub struct DyckPaths {
    n: usize,
    current: Option<Vec<Step>>,
    started: bool,
}

impl DyckPaths {
    pub fn new(n: usize) -> Self {
        DyckPaths {
            n,
            current: None,
            started: false,
        }
    }

    fn first(n: usize) -> Vec<Step> {
        let mut v = vec![Step::Up; n];
        v.extend(std::iter::repeat_n(Step::Down, n));
        v
    }

    /// Lexicographic successor: flip the rightmost `U` that may become `D`,
    /// then complete with the smallest suffix (all remaining `U` first).
    fn successor(steps: &mut [Step], n: usize) -> bool {
        let mut ups_before = vec![0usize; steps.len() + 1];
        for (i, s) in steps.iter().enumerate() {
            ups_before[i + 1] = ups_before[i] + usize::from(*s == Step::Up);
        }
        for i in (0..steps.len()).rev() {
            if steps[i] != Step::Up {
                continue;
            }
            let ups = ups_before[i];
            let height = 2 * ups - i;
            if height == 0 {
                continue;
            }
            steps[i] = Step::Down;
            let remaining_ups = n - ups;
            for s in steps[i + 1..].iter_mut().take(remaining_ups) {
                *s = Step::Up;
            }
            for s in steps[i + 1 + remaining_ups..].iter_mut() {
                *s = Step::Down;
            }
            return true;
        }
        false
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        if !self.started {
            self.started = true;
            self.current = Some(Self::first(self.n));
        } else {
            let cur = self.current.as_mut()?;
            if !Self::successor(cur, self.n) {
                self.current = None;
            }
        }
        self.current.clone().map(DyckPath::from_steps_unchecked)
    }
}

/// Feasible weight range of step `i` (0-based) given the weight of step
/// `i - 1`. The constraints only couple neighbouring steps, so a prefix is
/// valid iff each of its weights lies in the range given by its predecessor.
pub(crate) fn weight_range(
    steps: &[Step],
    heights: &[usize],
    i: usize,
    prev: Option<usize>,
) -> (usize, usize) {
    let mut lo = 0usize;
    let mut hi = heights[i].min(heights[i + 1]);
    if let Some(p) = prev {
        let apex = heights[i];
        match (steps[i - 1], steps[i]) {
            (Step::Up, Step::Up) => lo = lo.max(p),
            (Step::Down, Step::Down) => hi = hi.min(p),
            (Step::Up, Step::Down) => hi = hi.min(apex.saturating_sub(p)),
            (Step::Down, Step::Up) => lo = lo.max(apex.saturating_sub(p)),
        }
    }
    (lo, hi)
}

/// All valid weightings of one path, lexicographic on the weight vector.
pub struct Weightings {
    path: DyckPath,
    heights: Vec<usize>,
    weights: Vec<usize>,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Yielded,
    Done,
}

impl Weightings {
    pub fn new(path: DyckPath) -> Self {
        let heights = path.heights();
        let weights = vec![0; path.len()];
        Weightings {
            path,
            heights,
            weights,
            state: State::Fresh,
        }
    }

    fn range(&self, i: usize) -> (usize, usize) {
        let prev = i.checked_sub(1).map(|j| self.weights[j]);
        weight_range(self.path.steps(), &self.heights, i, prev)
    }

    /// Depth-first search from position `i`; when `descending` is false the
    /// value at `i` is already set and is advanced instead.
    fn search(&mut self, mut i: usize, mut descending: bool) -> bool {
        let len = self.weights.len();
        loop {
            if i == len {
                return true;
            }
            let (lo, hi) = self.range(i);
            if descending {
                if lo <= hi {
                    self.weights[i] = lo;
                    i += 1;
                    continue;
                }
            } else if self.weights[i] < hi {
                self.weights[i] += 1;
                i += 1;
                descending = true;
                continue;
            }
            if i == 0 {
                return false;
            }
            i -= 1;
            descending = false;
        }
    }
}

impl Iterator for Weightings {
    type Item = WeightedDyckPath;

    fn next(&mut self) -> Option<WeightedDyckPath> {
        let found = match self.state {
            State::Done => return None,
            State::Fresh => self.search(0, true),
            State::Yielded if self.weights.is_empty() => false,
            State::Yielded => self.search(self.weights.len() - 1, false),
        };
        if !found {
            self.state = State::Done;
            return None;
        }
        self.state = State::Yielded;
        Some(WeightedDyckPath::from_parts_unchecked(
            self.path.clone(),
            self.weights.clone(),
        ))
    }
}

/// Every weighted Dyck path of semilength `n`: paths in lexicographic order,
/// then weight vectors in lexicographic order.
pub struct WeightedPaths {
    paths: DyckPaths,
    current: Option<Weightings>,
}

impl WeightedPaths {
    pub fn new(n: usize) -> Self {
        WeightedPaths {
            paths: DyckPaths::new(n),
            current: None,
        }
    }
}

impl Iterator for WeightedPaths {
    type Item = WeightedDyckPath;

    fn next(&mut self) -> Option<WeightedDyckPath> {
        loop {
            if let Some(w) = self.current.as_mut().and_then(Iterator::next) {
                return Some(w);
            }
            self.current = Some(Weightings::new(self.paths.next()?));
        }
    }
}

/// Number of weighted Dyck paths of semilength `n`.
///
/// Transfer-matrix count over states (height, last step, last weight); no
/// path is materialized.
pub fn count_wd(n: usize) -> BigUint {
    type Key = (usize, Option<(Step, usize)>);
    let mut states: HashMap<Key, BigUint> = HashMap::new();
    states.insert((0, None), BigUint::from(1u32));
    for i in 0..2 * n {
        let mut next: HashMap<Key, BigUint> = HashMap::new();
        for ((h, last), count) in states {
            let ups_used = (i + h) / 2;
            let mut moves = Vec::with_capacity(2);
            if ups_used < n {
                moves.push((Step::Up, h + 1));
            }
            if h > 0 {
                moves.push((Step::Down, h - 1));
            }
            for (step, nh) in moves {
                let mut lo = 0;
                let mut hi = h.min(nh);
                if let Some((prev_step, pw)) = last {
                    match (prev_step, step) {
                        (Step::Up, Step::Up) => lo = pw,
                        (Step::Down, Step::Down) => hi = hi.min(pw),
                        (Step::Up, Step::Down) => hi = hi.min(h.saturating_sub(pw)),
                        (Step::Down, Step::Up) => lo = h.saturating_sub(pw),
                    }
                }
                for w in lo..=hi {
                    *next.entry((nh, Some((step, w)))).or_default() += &count;
                }
            }
        }
        states = next;
    }
    states
        .into_iter()
        .filter(|((h, _), _)| *h == 0)
        .map(|(_, c)| c)
        .sum()
}
