//! Dyck paths carrying one non-negative integer weight per step.
//!
//! Step positions are 1-based throughout the public API: step `u` of a path
//! of length `2n` has `1 <= u <= 2n`, and its endpoints sit at heights
//! `h[u-1]` and `h[u]` of the height profile.

pub(crate) mod enumerate;
mod format;
mod slopes;

use std::fmt;

use thiserror::Error;

pub use enumerate::{count_wd, DyckPaths, WeightedPaths, Weightings};
pub use format::PathRecord;
pub use slopes::{Apex, Slope, SlopeDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn opposite(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// One of the five weight constraints a weighted Dyck path must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    /// Weight at most the lower height of its step.
    C1,
    /// Weakly increasing along consecutive up steps.
    C2,
    /// Weakly decreasing along consecutive down steps.
    C3,
    /// Peak: the two adjacent weights sum to at most the peak height.
    C4,
    /// Valley: the two adjacent weights sum to at least the valley height.
    C5,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = match self {
            Constraint::C1 => "C1",
            Constraint::C2 => "C2",
            Constraint::C3 => "C3",
            Constraint::C4 => "C4",
            Constraint::C5 => "C5",
        };
        f.write_str(id)
    }
}

/// A failed constraint. Peak and valley conditions are reported at the
/// second step of the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub step: usize,
    pub constraint: Constraint,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at step {}", self.constraint, self.step)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid character {ch:?} at offset {offset}")]
    InvalidChar { ch: char, offset: usize },
    #[error("not a Dyck path: height drops below 0 at step {step}")]
    BelowGround { step: usize },
    #[error("not a Dyck path: ends at height {height}")]
    Unbalanced { height: usize },
    #[error("length mismatch: {steps} steps but {weights} weights")]
    LengthMismatch { steps: usize, weights: usize },
    #[error("invalid weight {0:?}")]
    InvalidWeight(String),
    #[error("step index {u} out of range 1..={len}")]
    StepOutOfRange { u: usize, len: usize },
    #[error("{}", join_violations(.0))]
    Violations(Vec<Violation>),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// A sequence of up and down steps that starts and ends at height 0 and
/// never goes below it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut h = 0usize;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => h += 1,
                Step::Down => {
                    h = h
                        .checked_sub(1)
                        .ok_or(PathError::BelowGround { step: i + 1 })?
                }
            }
        }
        if h != 0 {
            return Err(PathError::Unbalanced { height: h });
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    /// Builds the path of length `len` whose up steps sit exactly at the
    /// given 1-based positions.
    pub fn from_up_positions(len: usize, ups: &[usize]) -> Result<Self, PathError> {
        let mut steps = vec![Step::Down; len];
        for &u in ups {
            if u == 0 || u > len {
                return Err(PathError::StepOutOfRange { u, len });
            }
            steps[u - 1] = Step::Up;
        }
        DyckPath::new(steps)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        DyckPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps, `2n`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Step at 1-based position `u`.
    pub fn step(&self, u: usize) -> Option<Step> {
        u.checked_sub(1).and_then(|i| self.steps.get(i)).copied()
    }

    /// Height profile `h[0..=2n]`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = 0usize;
        h.push(cur);
        for s in &self.steps {
            match s {
                Step::Up => cur += 1,
                Step::Down => cur -= 1,
            }
            h.push(cur);
        }
        h
    }

    /// `min(h[u-1], h[u])` for the 1-based step `u`.
    pub fn lower_height(&self, u: usize) -> Result<usize, PathError> {
        if u == 0 || u > self.len() {
            return Err(PathError::StepOutOfRange { u, len: self.len() });
        }
        let h = self.heights();
        Ok(h[u - 1].min(h[u]))
    }

    pub fn up_positions(&self) -> Vec<usize> {
        self.positions_of(Step::Up)
    }

    pub fn down_positions(&self) -> Vec<usize> {
        self.positions_of(Step::Down)
    }

    fn positions_of(&self, kind: Step) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == kind)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Mirror image: read right to left with every step flipped.
    pub fn reflect(&self) -> DyckPath {
        DyckPath {
            steps: self.steps.iter().rev().map(|s| s.opposite()).collect(),
        }
    }

    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    /// 0-based half-open step ranges of the irreducible factors.
    pub fn factor_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut h = 0usize;
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            if h == 0 {
                out.push(start..i + 1);
                start = i + 1;
            }
        }
        out
    }

    /// True when the path never returns to height 0 before its end. The
    /// empty path counts as irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.factor_ranges().len() <= 1
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Lists every constraint violation of `weights` on `path`, sorted by step
/// index then constraint id. An empty list means the weighting is valid.
pub fn violations(path: &DyckPath, weights: &[usize]) -> Result<Vec<Violation>, PathError> {
    if weights.len() != path.len() {
        return Err(PathError::LengthMismatch {
            steps: path.len(),
            weights: weights.len(),
        });
    }
    let h = path.heights();
    let steps = path.steps();
    let mut out = Vec::new();
    for i in 0..steps.len() {
        let step = i + 1;
        if weights[i] > h[i].min(h[i + 1]) {
            out.push(Violation {
                step,
                constraint: Constraint::C1,
            });
        }
        if i == 0 {
            continue;
        }
        let (prev, cur) = (weights[i - 1], weights[i]);
        let apex = h[i];
        match (steps[i - 1], steps[i]) {
            (Step::Up, Step::Up) if cur < prev => out.push(Violation {
                step,
                constraint: Constraint::C2,
            }),
            (Step::Down, Step::Down) if cur > prev => out.push(Violation {
                step,
                constraint: Constraint::C3,
            }),
            (Step::Up, Step::Down) if prev + cur > apex => out.push(Violation {
                step,
                constraint: Constraint::C4,
            }),
            (Step::Down, Step::Up) if prev + cur < apex => out.push(Violation {
                step,
                constraint: Constraint::C5,
            }),
            _ => {}
        }
    }
    out.sort();
    Ok(out)
}

/// A Dyck path with a valid weighting.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedDyckPath {
    path: DyckPath,
    weights: Vec<usize>,
}

impl WeightedDyckPath {
    pub fn new(path: DyckPath, weights: Vec<usize>) -> Result<Self, PathError> {
        let v = violations(&path, &weights)?;
        if !v.is_empty() {
            return Err(PathError::Violations(v));
        }
        Ok(WeightedDyckPath { path, weights })
    }

    pub(crate) fn from_parts_unchecked(path: DyckPath, weights: Vec<usize>) -> Self {
        debug_assert_eq!(path.len(), weights.len());
        WeightedDyckPath { path, weights }
    }

    /// The path with every weight set to zero, if that weighting is valid.
    pub fn zero(path: DyckPath) -> Result<Self, PathError> {
        let w = vec![0; path.len()];
        WeightedDyckPath::new(path, w)
    }

    pub fn empty() -> Self {
        WeightedDyckPath::default()
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Weight of the 1-based step `u`.
    pub fn weight(&self, u: usize) -> Option<usize> {
        u.checked_sub(1).and_then(|i| self.weights.get(i)).copied()
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.path.semilength()
    }

    pub fn heights(&self) -> Vec<usize> {
        self.path.heights()
    }

    pub fn lower_height(&self, u: usize) -> Result<usize, PathError> {
        self.path.lower_height(u)
    }

    pub fn is_irreducible(&self) -> bool {
        self.path.is_irreducible()
    }

    pub fn slopes(&self) -> SlopeDecomposition {
        SlopeDecomposition::with_weights(&self.path, Some(&self.weights))
    }

    /// Reflection through a vertical axis; weights travel with their steps.
    pub fn reflect(&self) -> WeightedDyckPath {
        WeightedDyckPath {
            path: self.path.reflect(),
            weights: self.weights.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &WeightedDyckPath) -> WeightedDyckPath {
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        WeightedDyckPath {
            path: self.path.concat(&other.path),
            weights,
        }
    }

    /// Splits at every interior return to height 0.
    pub fn factor_irreducible(&self) -> Vec<WeightedDyckPath> {
        self.path
            .factor_ranges()
            .into_iter()
            .map(|r| WeightedDyckPath {
                path: DyckPath::from_steps_unchecked(self.path.steps()[r.clone()].to_vec()),
                weights: self.weights[r].to_vec(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn fig1() -> WeightedDyckPath {
        "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0"
            .parse()
            .unwrap()
    }

    #[test]
    fn heights_examples() {
        assert_eq!(path("UUDD").heights(), vec![0, 1, 2, 1, 0]);
        assert_eq!(path("UD").heights(), vec![0, 1, 0]);
        assert_eq!(
            path("UUDUDUUUDDUDDD").heights(),
            vec![0, 1, 2, 1, 2, 1, 2, 3, 4, 3, 2, 3, 2, 1, 0]
        );
    }

    #[test]
    fn lower_height_examples() {
        assert_eq!(path("UUDD").lower_height(1), Ok(0));
        assert_eq!(path("UUDUDUUUDDUDDD").lower_height(8), Ok(3));
        assert_eq!(path("UUDD").lower_height(3), Ok(1));
        assert_eq!(
            path("UUDD").lower_height(5),
            Err(PathError::StepOutOfRange { u: 5, len: 4 })
        );
        assert!(path("UUDD").lower_height(0).is_err());
    }

    #[test]
    fn validation_examples() {
        let p = path("UUDUDUUUDDUDDD");
        assert_eq!(
            violations(&p, &[0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 0, 2, 1, 0]),
            Ok(vec![])
        );
        let v = violations(&path("UUDD"), &[0, 1, 2, 0]).unwrap();
        assert_eq!(
            v[0],
            Violation {
                step: 3,
                constraint: Constraint::C1
            }
        );
        assert_eq!(violations(&path("UUDD"), &[0, 1, 1, 0]), Ok(vec![]));
        assert_eq!(
            violations(&path("UUDD"), &[0, 1]),
            Err(PathError::LengthMismatch {
                steps: 4,
                weights: 2
            })
        );
    }

    #[test]
    fn each_constraint_is_reported() {
        // C2: decreasing rise.
        let v = violations(&path("UUUDDD"), &[0, 1, 0, 0, 0, 0]).unwrap();
        assert!(v.contains(&Violation {
            step: 3,
            constraint: Constraint::C2
        }));
        // C3: increasing descent.
        let v = violations(&path("UUUDDD"), &[0, 0, 0, 0, 1, 0]).unwrap();
        assert!(v.contains(&Violation {
            step: 5,
            constraint: Constraint::C3
        }));
        // C4: peak of height 3 with 2 + 2.
        let v = violations(&path("UUUDDD"), &[0, 1, 2, 2, 1, 0]).unwrap();
        assert_eq!(
            v,
            vec![Violation {
                step: 4,
                constraint: Constraint::C4
            }]
        );
        // C5: valley of height 1 with 0 + 0.
        let v = violations(&path("UUDUDD"), &[0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            v,
            vec![Violation {
                step: 4,
                constraint: Constraint::C5
            }]
        );
    }

    #[test]
    fn violations_are_sorted_and_exhaustive() {
        let v = violations(&path("UUDD"), &[1, 1, 2, 1]).unwrap();
        assert_eq!(
            v,
            vec![
                Violation {
                    step: 1,
                    constraint: Constraint::C1
                },
                Violation {
                    step: 3,
                    constraint: Constraint::C1
                },
                Violation {
                    step: 3,
                    constraint: Constraint::C4
                },
                Violation {
                    step: 4,
                    constraint: Constraint::C1
                },
            ]
        );
    }

    #[test]
    fn dyck_prefix_condition() {
        assert_eq!(
            DyckPath::new(vec![Step::Up, Step::Down, Step::Down]),
            Err(PathError::BelowGround { step: 3 })
        );
        assert_eq!(
            DyckPath::new(vec![Step::Up, Step::Up, Step::Down]),
            Err(PathError::Unbalanced { height: 1 })
        );
    }

    #[test]
    fn reflect_and_concat() {
        let a: WeightedDyckPath = "UUDUUDDD;0,0,0,1,2,1,1,0".parse().unwrap();
        let r = a.reflect();
        assert_eq!(r.to_string(), "UUUDDUDD;0,1,1,2,1,0,0,0");
        let mut sorted_a = a.weights().to_vec();
        let mut sorted_r = r.weights().to_vec();
        sorted_a.sort();
        sorted_r.sort();
        assert_eq!(sorted_a, sorted_r);
        assert!(violations(r.path(), r.weights()).unwrap().is_empty());
        let ud: WeightedDyckPath = "UD;0,0".parse().unwrap();
        assert_eq!(ud.reflect(), ud);
        assert_eq!(fig1().reflect().reflect(), fig1());

        let red: WeightedDyckPath = "UUDD;0,1,0,0".parse().unwrap();
        assert_eq!(
            a.concat(&red).to_string(),
            "UUDUUDDDUUDD;0,0,0,1,2,1,1,0,0,1,0,0"
        );
        assert_eq!(WeightedDyckPath::empty().concat(&a), a);
        assert_eq!(ud.concat(&ud).to_string(), "UDUD;0,0,0,0");
    }

    #[test]
    fn factorization() {
        let wd = WeightedDyckPath::zero(path("UDUUDD")).unwrap();
        let f = wd.factor_irreducible();
        assert_eq!(
            f.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            vec!["UD;0,0", "UUDD;0,0,0,0"]
        );
        assert_eq!(fig1().factor_irreducible(), vec![fig1()]);
        assert!(WeightedDyckPath::empty().factor_irreducible().is_empty());
        assert!(fig1().is_irreducible());
        assert!(!wd.is_irreducible());
    }
}
