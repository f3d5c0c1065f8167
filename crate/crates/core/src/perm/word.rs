use std::fmt;

use super::{write_letters, PermError, Permutation};

/// Distinct letters drawn from `{1..ambient}`, not necessarily all of them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartialWord {
    letters: Vec<usize>,
    ambient: usize,
}

impl PartialWord {
    pub fn new(letters: Vec<usize>, ambient: usize) -> Result<Self, PermError> {
        let mut seen = vec![false; ambient + 1];
        for &v in &letters {
            if v == 0 || v > ambient || seen[v] {
                return Err(PermError::BadWordLetter { letter: v, ambient });
            }
            seen[v] = true;
        }
        Ok(PartialWord { letters, ambient })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn schutzenberger(&self) -> PartialWord {
        PartialWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|v| self.ambient + 1 - v)
                .collect(),
            ambient: self.ambient,
        }
    }

    pub fn avoids_123(&self) -> bool {
        avoids_123(&self.letters)
    }

    pub fn standardize(&self) -> Permutation {
        standardize(&self.letters)
    }
}

impl fmt::Display for PartialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// Length of the longest strictly increasing subsequence (patience sorting).
pub fn lis_length(letters: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in letters {
        let i = tails.partition_point(|&t| t < x);
        if i == tails.len() {
            tails.push(x);
        } else {
            tails[i] = x;
        }
    }
    tails.len()
}

/// No strictly increasing subsequence of length 3.
pub fn avoids_123(letters: &[usize]) -> bool {
    // Single pass keeping the smallest letter seen and the smallest letter
    // that ends an increasing pair.
    let mut min = usize::MAX;
    let mut pair_end = usize::MAX;
    for &x in letters {
        if x > pair_end {
            return false;
        }
        if x > min {
            pair_end = pair_end.min(x);
        } else {
            min = x;
        }
    }
    true
}

/// Replaces each letter by its rank among the letters of the word.
pub fn standardize(letters: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by_key(|&i| letters[i]);
    let mut out = vec![0; letters.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation::from_vec_unchecked(out)
}
