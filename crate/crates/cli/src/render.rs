use dyck_updown::{Step, WeightedDyckPath};

/// One row per unit of height, top row first, one column per step, with a
/// final line holding each step's weight under its column. Weights above 9
/// are written as base-36 digits.
pub fn ascii(wd: &WeightedDyckPath) -> String {
    let steps = wd.path().steps();
    let heights = wd.heights();
    let rows = heights.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![' '; steps.len()]; rows];
    for (i, s) in steps.iter().enumerate() {
        let (row, c) = match s {
            Step::Up => (heights[i], '/'),
            Step::Down => (heights[i + 1], '\\'),
        };
        grid[rows - 1 - row][i] = c;
    }
    let mut out = String::new();
    for line in grid {
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    let digits: String = wd
        .weights()
        .iter()
        .map(|&w| char::from_digit(w as u32, 36).unwrap_or('?'))
        .collect();
    out.push_str(&digits);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_drawing() {
        let wd: WeightedDyckPath = "UD;0,0".parse().unwrap();
        assert_eq!(ascii(&wd), "/\\\n00\n");
    }

    #[test]
    fn two_levels() {
        let wd: WeightedDyckPath = "UUDD;0,1,1,0".parse().unwrap();
        assert_eq!(ascii(&wd), " /\\\n/  \\\n0110\n");
    }
}
