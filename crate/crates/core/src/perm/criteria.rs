use serde::Serialize;

use super::{avoids_123, PermError, Permutation};

/// The four conditions characterizing 1234-avoiding up-down permutations
/// through their bottom (odd-position) and top (even-position) letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriteriaBreakdown {
    /// The top word avoids 123.
    pub c1: bool,
    /// The bottom word avoids 123.
    pub c2: bool,
    /// Every top value smaller than a bottom letter `k` lies to the right of `k`.
    pub c3: bool,
    /// For every bottom letter `k` with a smaller bottom letter to its left,
    /// the top values greater than `k` lying to its right appear in
    /// decreasing order.
    pub c4: bool,
}

impl CriteriaBreakdown {
    pub fn holds(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4
    }
}

pub fn criteria_borie(sigma: &Permutation) -> Result<CriteriaBreakdown, PermError> {
    let s = sigma.as_slice();
    if s.len() % 2 == 1 {
        return Err(PermError::OddSize(s.len()));
    }
    let bot: Vec<usize> = s.iter().step_by(2).copied().collect();
    let top: Vec<usize> = s.iter().skip(1).step_by(2).copied().collect();
    let is_top = |i: usize| i % 2 == 1;

    let c1 = avoids_123(&top);
    let c2 = avoids_123(&bot);

    let c3 = s.iter().enumerate().all(|(i, &t)| {
        // top value t at position i: no bottom letter k > t at or after i
        !is_top(i)
            || s[i..]
                .iter()
                .enumerate()
                .all(|(j, &k)| is_top(i + j) || k < t)
    });

    let mut c4 = true;
    let mut min_bot_so_far = usize::MAX;
    for (i, &k) in s.iter().enumerate() {
        if is_top(i) {
            continue;
        }
        if min_bot_so_far < k {
            let mut last = usize::MAX;
            for (j, &t) in s.iter().enumerate().skip(i + 1) {
                if is_top(j) && t > k {
                    if t > last {
                        c4 = false;
                        break;
                    }
                    last = t;
                }
            }
        }
        min_bot_so_far = min_bot_so_far.min(k);
        if !c4 {
            break;
        }
    }

    Ok(CriteriaBreakdown { c1, c2, c3, c4 })
}
