//! Exhaustive property suites over all instances up to a size bound.

mod suites;
mod topword;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::bijection::SplitRule;

pub use suites::{check_fixtures, Fixture, FIXTURES, LIST_A6};
pub use topword::topword_direct;

/// At most this many failures are kept in a report; `failure_count` has the total.
pub const MAX_RECORDED_FAILURES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteId {
    Counts,
    Bijectivity,
    Roundtrip,
    Schutzenberger,
    Product,
    Statistic,
    Criteria,
    InsertionLemma,
    Transformation,
    Parking,
    TopwordEquivalence,
}

impl SuiteId {
    pub const ALL: [SuiteId; 11] = [
        SuiteId::Counts,
        SuiteId::Bijectivity,
        SuiteId::Roundtrip,
        SuiteId::Schutzenberger,
        SuiteId::Product,
        SuiteId::Statistic,
        SuiteId::Criteria,
        SuiteId::InsertionLemma,
        SuiteId::Transformation,
        SuiteId::Parking,
        SuiteId::TopwordEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Counts => "counts",
            SuiteId::Bijectivity => "bijectivity",
            SuiteId::Roundtrip => "roundtrip",
            SuiteId::Schutzenberger => "schutzenberger",
            SuiteId::Product => "product",
            SuiteId::Statistic => "statistic",
            SuiteId::Criteria => "criteria",
            SuiteId::InsertionLemma => "insertion_lemma",
            SuiteId::Transformation => "transformation",
            SuiteId::Parking => "parking",
            SuiteId::TopwordEquivalence => "topword_equivalence",
        }
    }

    /// Semilength bound used by [`run_all`]. For `criteria` this bounds the
    /// permutation size by twice the value.
    pub fn default_cap(self, stretch: bool) -> usize {
        match self {
            SuiteId::Counts if stretch => 7,
            SuiteId::Counts | SuiteId::Bijectivity | SuiteId::Roundtrip | SuiteId::Statistic => 6,
            SuiteId::Schutzenberger | SuiteId::Product => 5,
            SuiteId::Criteria => 5,
            SuiteId::Parking => 8,
            SuiteId::Transformation | SuiteId::InsertionLemma => 6,
            SuiteId::TopwordEquivalence => 5,
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = SuiteId::ALL.iter().map(|s| s.name()).collect();
        write!(
            f,
            "unknown suite {:?} (expected one of {})",
            self.0,
            names.join(", ")
        )
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for SuiteId {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        SuiteId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Aborted,
}

/// One counterexample, in the canonical text forms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(input: impl ToString, expected: impl ToString, actual: impl ToString) -> Self {
        Failure {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub suite: SuiteId,
    /// Smallest and largest semilength covered.
    pub n_range: [usize; 2],
    pub split_rule: SplitRule,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
    pub verdict: Verdict,
}

fn as_secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub split_rule: SplitRule,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Lets [`run_all`] include the slow n = 7 count.
    pub stretch: bool,
    /// Set from another thread to stop early; the report is then `aborted`.
    pub cancel: Option<Arc<AtomicBool>>,
}

impl RunOptions {
    pub fn with_rule(split_rule: SplitRule) -> Self {
        RunOptions {
            split_rule,
            ..RunOptions::default()
        }
    }
}

/// Accumulates counts and failures for one suite; shared by worker threads
/// only through reductions.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl Tally {
    pub fn ok() -> Tally {
        Tally {
            checked: 1,
            failures: Vec::new(),
        }
    }

    pub fn fail(f: Failure) -> Tally {
        Tally {
            checked: 1,
            failures: vec![f],
        }
    }

    pub fn check(cond: bool, f: impl FnOnce() -> Failure) -> Tally {
        if cond {
            Tally::ok()
        } else {
            Tally::fail(f())
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }

    pub fn add(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

pub(crate) struct Ctx<'a> {
    pub rule: SplitRule,
    cancel: Option<&'a AtomicBool>,
}

impl Ctx<'_> {
    pub fn cancelled(&self) -> bool {
        self.cancel.is_some_and(|c| c.load(Ordering::Relaxed))
    }
}

/// Runs one suite over every instance of semilength `0..=max_n`.
pub fn run_suite(id: SuiteId, max_n: usize, opts: &RunOptions) -> VerificationReport {
    let start = Instant::now();
    let ctx = Ctx {
        rule: opts.split_rule,
        cancel: opts.cancel.as_deref(),
    };
    let run = || suites::dispatch(id, max_n, &ctx);
    let tally = match opts
        .threads
        .and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok())
    {
        Some(pool) => pool.install(run),
        None => run(),
    };
    let Tally {
        checked,
        mut failures,
    } = tally;
    failures.sort();
    failures.dedup();
    let failure_count = failures.len() as u64;
    failures.truncate(MAX_RECORDED_FAILURES);
    let verdict = if ctx.cancelled() {
        Verdict::Aborted
    } else if failures.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    VerificationReport {
        suite: id,
        n_range: [0, max_n],
        split_rule: opts.split_rule,
        checked,
        failure_count,
        failures,
        elapsed: start.elapsed(),
        verdict,
    }
}

/// Runs every suite at `min(max_n, default cap)`.
pub fn run_all(max_n: usize, opts: &RunOptions) -> Vec<VerificationReport> {
    SuiteId::ALL
        .iter()
        .map(|&id| run_suite(id, max_n.min(id.default_cap(opts.stretch)), opts))
        .collect()
}
