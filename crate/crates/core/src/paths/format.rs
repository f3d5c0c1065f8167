//! Text form `<steps>;<w1>,<w2>,...` and the line-delimited record form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{DyckPath, PathError, Step, WeightedDyckPath};

impl FromStr for DyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, PathError> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(offset, ch)| match ch {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                _ => Err(PathError::InvalidChar { ch, offset }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::new(steps)
    }
}

/// Parses `<steps>;<weights>`. Without the `;` section every weight is 0,
/// which is accepted only if that weighting is valid.
impl FromStr for WeightedDyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, PathError> {
        let s = s.trim();
        let (steps, weights) = match s.split_once(';') {
            Some((p, w)) => (p, Some(w.trim())),
            None => (s, None),
        };
        let path: DyckPath = steps.parse()?;
        let weights = match weights {
            None => vec![0; path.len()],
            Some("") => Vec::new(),
            Some(w) => w
                .split(',')
                .map(|x| {
                    let x = x.trim();
                    x.parse::<usize>()
                        .map_err(|_| PathError::InvalidWeight(x.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        WeightedDyckPath::new(path, weights)
    }
}

impl fmt::Display for WeightedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.path())?;
        for (i, w) in self.weights().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// One enumeration record: `{"steps":"UUDD","weights":[0,1,1,0]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub steps: String,
    pub weights: Vec<usize>,
}

impl From<&WeightedDyckPath> for PathRecord {
    fn from(wd: &WeightedDyckPath) -> Self {
        PathRecord {
            steps: wd.path().to_string(),
            weights: wd.weights().to_vec(),
        }
    }
}

impl TryFrom<PathRecord> for WeightedDyckPath {
    type Error = PathError;

    fn try_from(r: PathRecord) -> Result<Self, PathError> {
        WeightedDyckPath::new(r.steps.parse()?, r.weights)
    }
}
