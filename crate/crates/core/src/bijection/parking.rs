use std::fmt;

use super::{ins, BijectionError, Half, SplitRule};
use crate::paths::WeightedDyckPath;
use crate::perm::Permutation;

/// A weakly increasing sequence `v1..vn` with `vi <= i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction(Vec<usize>);

impl ParkingFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, BijectionError> {
        let ok = values.iter().enumerate().all(|(i, &v)| v <= i)
            && values.windows(2).all(|w| w[0] <= w[1]);
        if ok {
            Ok(ParkingFunction(values))
        } else {
            Err(BijectionError::NotParking(values))
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::perm::write_letters(f, &self.0)
    }
}

/// All non-decreasing parking functions of length `n`, lexicographically.
pub fn parking_functions(n: usize) -> Vec<ParkingFunction> {
    fn extend(cur: &mut Vec<usize>, n: usize, out: &mut Vec<ParkingFunction>) {
        let i = cur.len();
        if i == n {
            out.push(ParkingFunction(cur.clone()));
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=i {
            cur.push(v);
            extend(cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out
}

/// Flattens the up slopes of an irreducible path into one slope: a jumping
/// step repeats the previous image weight, any other step gets its weight
/// plus its shift, plus one more in the right half.
pub fn to_single_slope(
    wd: &WeightedDyckPath,
    rule: SplitRule,
) -> Result<ParkingFunction, BijectionError> {
    let (_, trace) = ins(wd, rule)?;
    let mut values = Vec::with_capacity(trace.steps.len());
    for s in &trace.steps {
        let v = if s.jumped {
            values.last().copied().unwrap_or(0)
        } else {
            s.weight + s.shift + usize::from(s.half == Half::R)
        };
        values.push(v);
    }
    ParkingFunction::new(values)
}

/// Runs the insertion on a single up slope whose weights are `pf`, with the
/// whole slope in the left half: step `i` jumps iff `vi = v(i-1)` (always
/// for the first), and otherwise lands `vi - 1` letters from the right end.
pub fn parking_to_123avoiding(pf: &ParkingFunction) -> Permutation {
    let v = pf.values();
    let mut word: Vec<usize> = Vec::with_capacity(v.len());
    for i in 0..v.len() {
        let at = if i == 0 || v[i] == v[i - 1] {
            0
        } else {
            word.len() - (v[i] - 1)
        };
        word.insert(at, i + 1);
    }
    Permutation::from_vec_unchecked(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::standardize;

    #[test]
    fn running_example_transformation() {
        let wd: WeightedDyckPath = "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0"
            .parse()
            .unwrap();
        let pf = to_single_slope(&wd, SplitRule::CeilHalf).unwrap();
        assert_eq!(pf.values(), &[0, 0, 2, 2, 4, 4, 5]);
        assert_eq!(
            parking_to_123avoiding(&pf).as_slice(),
            &[6, 4, 7, 5, 2, 3, 1]
        );
        let (bot, _) = ins(&wd, SplitRule::CeilHalf).unwrap();
        assert_eq!(parking_to_123avoiding(&pf), standardize(bot.letters()));
    }

    #[test]
    fn small_cases() {
        let ud: WeightedDyckPath = "UD;0,0".parse().unwrap();
        assert_eq!(
            to_single_slope(&ud, SplitRule::CeilHalf).unwrap().values(),
            &[0]
        );
        let uudd: WeightedDyckPath = "UUDD;0,1,1,0".parse().unwrap();
        let pf = to_single_slope(&uudd, SplitRule::CeilHalf).unwrap();
        assert_eq!(pf.values(), &[0, 1]);
        assert_eq!(parking_to_123avoiding(&pf).as_slice(), &[1, 2]);
        let one = ParkingFunction::new(vec![0]).unwrap();
        assert_eq!(parking_to_123avoiding(&one).as_slice(), &[1]);
        let zeros = ParkingFunction::new(vec![0; 5]).unwrap();
        assert_eq!(parking_to_123avoiding(&zeros).as_slice(), &[5, 4, 3, 2, 1]);
    }

    #[test]
    fn validation() {
        assert!(ParkingFunction::new(vec![0, 2]).is_err());
        assert!(ParkingFunction::new(vec![0, 1, 0]).is_err());
        assert!(ParkingFunction::new(vec![1]).is_err());
        assert!(ParkingFunction::new(vec![]).is_ok());
    }

    #[test]
    fn catalan_many() {
        let counts: Vec<usize> = (0..=6).map(|n| parking_functions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }
}
