use super::{AlternatingPermutation, Permutation};

/// Patience-sorting tails of the prefix, capped at three piles.
#[derive(Clone, Copy)]
struct Tails {
    vals: [usize; 3],
    len: usize,
}

impl Tails {
    const EMPTY: Tails = Tails {
        vals: [0; 3],
        len: 0,
    };

    /// Tails after appending `x`, or `None` if that creates an increasing
    /// subsequence of length 4.
    fn push(self, x: usize) -> Option<Tails> {
        let i = self.vals[..self.len].partition_point(|&t| t < x);
        if i == 3 {
            return None;
        }
        let mut next = self;
        next.vals[i] = x;
        if i == next.len {
            next.len += 1;
        }
        Some(next)
    }
}

/// The up-down permutations of size `2n` avoiding 1234, in lexicographic
/// order, generated by backtracking with shape and LIS pruning.
pub struct UpDownAvoiders {
    size: usize,
    prefix: Vec<usize>,
    tails: Vec<Tails>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl UpDownAvoiders {
    pub fn new(n: usize) -> Self {
        let size = 2 * n;
        UpDownAvoiders {
            size,
            prefix: Vec::with_capacity(size),
            tails: vec![Tails::EMPTY],
            used: vec![false; size + 1],
            started: false,
            done: false,
        }
    }

    fn fits(&self, v: usize) -> Option<Tails> {
        if self.used[v] {
            return None;
        }
        let d = self.prefix.len();
        if let Some(&prev) = self.prefix.last() {
            let ascent = d % 2 == 1;
            if ascent != (prev < v) {
                return None;
            }
        }
        // a bottom letter needs a larger unused letter after it
        if d.is_multiple_of(2) && d + 1 < self.size && !(v + 1..=self.size).any(|x| !self.used[x]) {
            return None;
        }
        self.tails.last().copied().and_then(|t| t.push(v))
    }

    fn push(&mut self, v: usize, t: Tails) {
        self.prefix.push(v);
        self.tails.push(t);
        self.used[v] = true;
    }

    fn pop(&mut self) -> Option<usize> {
        let v = self.prefix.pop()?;
        self.tails.pop();
        self.used[v] = false;
        Some(v)
    }
}

impl Iterator for UpDownAvoiders {
    type Item = AlternatingPermutation;

    fn next(&mut self) -> Option<AlternatingPermutation> {
        if self.done {
            return None;
        }
        let mut from = 1;
        if self.started {
            match self.pop() {
                Some(v) => from = v + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        loop {
            if self.prefix.len() == self.size {
                let p = Permutation::from_vec_unchecked(self.prefix.clone());
                return Some(AlternatingPermutation(p));
            }
            let found = (from..=self.size).find_map(|v| self.fits(v).map(|t| (v, t)));
            match found {
                Some((v, t)) => {
                    self.push(v, t);
                    from = 1;
                }
                None => match self.pop() {
                    Some(v) => from = v + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn small_sizes() {
        let zero: Vec<String> = UpDownAvoiders::new(0).map(|p| p.to_string()).collect();
        assert_eq!(zero, vec![""]);
        let one: Vec<String> = UpDownAvoiders::new(1).map(|p| p.to_string()).collect();
        assert_eq!(one, vec!["1,2"]);
        let two: Vec<String> = UpDownAvoiders::new(2).map(|p| p.to_string()).collect();
        assert_eq!(
            two,
            vec!["1,3,2,4", "1,4,2,3", "2,3,1,4", "2,4,1,3", "3,4,1,2"]
        );
    }

    #[test]
    fn agrees_with_brute_force_filter() {
        for n in 0..=4 {
            let fast: Vec<Vec<usize>> = UpDownAvoiders::new(n)
                .map(|p| p.into_perm().into_vec())
                .collect();
            let slow: Vec<Vec<usize>> = (1..=2 * n)
                .permutations(2 * n)
                .filter(|v| {
                    let p = Permutation::new(v.clone()).unwrap();
                    p.is_up_down() && p.avoids_1234()
                })
                .collect();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn counts() {
        let got: Vec<usize> = (0..=5).map(|n| UpDownAvoiders::new(n).count()).collect();
        assert_eq!(got, vec![1, 1, 5, 42, 462, 6006]);
    }
}
