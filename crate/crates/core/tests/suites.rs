use std::sync::atomic::AtomicBool;
use std::sync::Arc;

use dyck_updown::verify::{
    check_fixtures, run_all, run_suite, Fixture, RunOptions, SuiteId, Verdict, VerificationReport,
    FIXTURES,
};
use dyck_updown::SplitRule;

fn strip(r: &VerificationReport) -> serde_json::Value {
    let mut v = serde_json::to_value(r).unwrap();
    v.as_object_mut().unwrap().remove("elapsed");
    v
}

#[test]
fn counts_up_to_six() {
    let r = run_suite(SuiteId::Counts, 6, &RunOptions::default());
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.failures);
    assert_eq!(r.checked, 7);
}

#[test]
fn every_suite_but_criteria_passes_at_default_caps() {
    for r in run_all(4, &RunOptions::default()) {
        match r.suite {
            SuiteId::Criteria => {
                assert_eq!(r.verdict, Verdict::Fail);
                assert_eq!(r.failure_count, 1 + 7 + 81 + 1200);
            }
            _ => assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.suite, r.failures),
        }
    }
}

#[test]
fn caps_limit_the_range() {
    let reports = run_all(100, &RunOptions::default());
    let ranges: Vec<(SuiteId, usize)> = reports.iter().map(|r| (r.suite, r.n_range[1])).collect();
    assert!(ranges.contains(&(SuiteId::Parking, 8)));
    assert!(ranges.contains(&(SuiteId::Product, 5)));
    assert!(ranges.contains(&(SuiteId::Counts, 6)));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    for id in [
        SuiteId::Bijectivity,
        SuiteId::Product,
        SuiteId::Criteria,
        SuiteId::Roundtrip,
    ] {
        let one = run_suite(
            id,
            4,
            &RunOptions {
                threads: Some(1),
                ..RunOptions::default()
            },
        );
        let four = run_suite(
            id,
            4,
            &RunOptions {
                threads: Some(4),
                ..RunOptions::default()
            },
        );
        assert_eq!(strip(&one), strip(&four), "{id}");
    }
}

#[test]
fn floor_rule_gets_a_verdict() {
    let opts = RunOptions::with_rule(SplitRule::FloorHalf);
    assert_eq!(
        run_suite(SuiteId::Bijectivity, 2, &opts).verdict,
        Verdict::Pass
    );
    let r = run_suite(SuiteId::Bijectivity, 3, &opts);
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.failure_count > 0);
}

#[test]
fn corrupted_fixture_is_named() {
    let mut fixtures = FIXTURES.to_vec();
    assert!(check_fixtures(&fixtures, SplitRule::CeilHalf).passed());
    // last weight 0 -> 1 breaks the fixture's expected image
    fixtures[0] = Fixture {
        path: "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,1",
        perm: FIXTURES[0].perm,
    };
    let r = check_fixtures(&fixtures, SplitRule::CeilHalf);
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.failures.len(), 1);
    assert_eq!(r.failures[0].input, fixtures[0].path);

    fixtures[0] = Fixture {
        path: "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,1,2,1,0",
        perm: FIXTURES[0].perm,
    };
    let r = check_fixtures(&fixtures, SplitRule::CeilHalf);
    assert_eq!(r.failures[0].input, fixtures[0].path);
}

#[test]
fn cancellation_aborts() {
    let opts = RunOptions {
        cancel: Some(Arc::new(AtomicBool::new(true))),
        ..RunOptions::default()
    };
    for id in SuiteId::ALL {
        assert_eq!(run_suite(id, 3, &opts).verdict, Verdict::Aborted, "{id}");
    }
}

#[test]
fn failures_are_sorted_and_capped() {
    let r = run_suite(SuiteId::Criteria, 5, &RunOptions::default());
    assert_eq!(r.failures.len(), 100);
    assert!(r.failure_count > 100);
    assert!(r.failures.windows(2).all(|w| w[0] <= w[1]));
}
