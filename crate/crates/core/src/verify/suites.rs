use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{topword_direct, Ctx, Failure, SuiteId, Tally, VerificationReport};
use crate::bijection::{
    beta, ins, invert, invert_brute, parking_functions, parking_to_123avoiding, to_single_slope,
    BruteIndex, SplitRule,
};
use crate::paths::{count_wd, DyckPath, DyckPaths, WeightedDyckPath, Weightings};
use crate::perm::{avoids_123, criteria_borie, schutzenberger_word, Permutation, UpDownAvoiders};
use crate::REFERENCE_COUNTS;

/// The 42 up-down permutations of size 6 avoiding 1234, as printed.
pub const LIST_A6: [&str; 42] = [
    "143625", "153624", "154623", "163524", "164523", "241635", "243615", "251436", "251634",
    "253614", "254613", "261435", "261534", "263514", "264513", "341625", "342615", "351426",
    "351624", "352416", "352614", "354612", "361425", "361524", "362415", "362514", "364512",
    "451326", "451623", "452316", "452613", "453612", "461325", "461523", "462315", "462513",
    "463512", "561324", "561423", "562314", "562413", "563412",
];

/// A weighted path together with its expected image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub path: &'static str,
    pub perm: &'static str,
}

pub const FIXTURES: [Fixture; 9] = [
    Fixture {
        path: "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0",
        perm: "8,13,6,12,11,14,7,10,2,9,4,5,1,3",
    },
    Fixture {
        path: "UD;0,0",
        perm: "1,2",
    },
    Fixture {
        path: "UDUD;0,0,0,0",
        perm: "3,4,1,2",
    },
    Fixture {
        path: "UUDD;0,0,0,0",
        perm: "2,4,1,3",
    },
    Fixture {
        path: "UUDD;0,0,1,0",
        perm: "2,3,1,4",
    },
    Fixture {
        path: "UUDD;0,1,0,0",
        perm: "1,4,2,3",
    },
    Fixture {
        path: "UUDD;0,1,1,0",
        perm: "1,3,2,4",
    },
    Fixture {
        path: "UUDDUD;0,0,0,0,0,0",
        perm: "5,6,2,4,1,3",
    },
    Fixture {
        path: ";",
        perm: "",
    },
];

pub(super) fn dispatch(id: SuiteId, max_n: usize, ctx: &Ctx<'_>) -> Tally {
    match id {
        SuiteId::Counts => counts(max_n, ctx),
        SuiteId::Bijectivity => bijectivity(max_n, ctx),
        SuiteId::Roundtrip => roundtrip(max_n, ctx),
        SuiteId::Schutzenberger => schutzenberger(max_n, ctx),
        SuiteId::Product => product(max_n, ctx),
        SuiteId::Statistic => statistic(max_n, ctx),
        SuiteId::Criteria => criteria(max_n, ctx),
        SuiteId::InsertionLemma => insertion_lemma(max_n, ctx),
        SuiteId::Transformation => transformation(max_n, ctx),
        SuiteId::Parking => parking(max_n, ctx),
        SuiteId::TopwordEquivalence => topword_equivalence(max_n, ctx),
    }
}

fn paths(n: usize) -> Vec<DyckPath> {
    DyckPaths::new(n).collect()
}

fn irreducible_paths(n: usize) -> Vec<DyckPath> {
    DyckPaths::new(n).filter(DyckPath::is_irreducible).collect()
}

/// Applies `check` to every weighted path of semilength `n` (or only the
/// irreducible ones), in parallel over the underlying paths.
fn each_wd<F>(n: usize, irreducible_only: bool, ctx: &Ctx<'_>, check: F) -> Tally
where
    F: Fn(&WeightedDyckPath) -> Tally + Sync,
{
    let ps = if irreducible_only {
        irreducible_paths(n)
    } else {
        paths(n)
    };
    ps.into_par_iter()
        .map(|p| {
            let mut t = Tally::default();
            for wd in Weightings::new(p) {
                if ctx.cancelled() {
                    break;
                }
                t.add(check(&wd));
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn over_sizes(max_n: usize, ctx: &Ctx<'_>, f: impl Fn(usize) -> Tally) -> Tally {
    let mut t = Tally::default();
    for n in 0..=max_n {
        if ctx.cancelled() {
            break;
        }
        t.add(f(n));
    }
    t
}

fn image(wd: &WeightedDyckPath, rule: SplitRule) -> Result<Permutation, Failure> {
    beta(wd, rule)
        .map(|a| a.into_perm())
        .map_err(|e| Failure::new(wd, "an image", format!("error: {e}")))
}

fn counts(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    over_sizes(max_n, ctx, |n| {
        let formula = count_wd(n);
        let enumerated: u64 = paths(n)
            .into_par_iter()
            .map(|p| Weightings::new(p).count() as u64)
            .sum();
        let avoiders = UpDownAvoiders::new(n).count() as u64;
        let expected = match REFERENCE_COUNTS.get(n) {
            Some(&r) => BigUint::from(r),
            None => formula.clone(),
        };
        let ok = formula == expected
            && BigUint::from(enumerated) == expected
            && BigUint::from(avoiders) == expected;
        Tally::check(ok, || {
            Failure::new(
                format!("n={n}"),
                expected,
                format!("transfer={formula} enumerated={enumerated} avoiders={avoiders}"),
            )
        })
    })
}

fn bijectivity(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    over_sizes(max_n, ctx, |n| {
        let (mut images, mut t) = paths(n)
            .into_par_iter()
            .map(|p| {
                let mut images = Vec::new();
                let mut t = Tally::default();
                for wd in Weightings::new(p) {
                    if ctx.cancelled() {
                        break;
                    }
                    match image(&wd, rule) {
                        Err(f) => t.add(Tally::fail(f)),
                        Ok(s) => {
                            let member = s.is_up_down() && s.avoids_1234();
                            let crit = criteria_borie(&s).map(|c| c.holds()).unwrap_or(false);
                            t.add(Tally::check(member && crit, || {
                                Failure::new(&wd, "up-down, 1234-avoiding, criteria hold", &s)
                            }));
                            images.push((s, wd));
                        }
                    }
                }
                (images, t)
            })
            .reduce(
                || (Vec::new(), Tally::default()),
                |(mut a, ta), (b, tb)| {
                    a.extend(b);
                    (a, ta.merge(tb))
                },
            );
        images.sort();
        for pair in images.windows(2) {
            if pair[0].0 == pair[1].0 {
                t.failures.push(Failure::new(
                    &pair[1].1,
                    format!("image distinct from {}", pair[0].1),
                    &pair[1].0,
                ));
            }
        }
        let image_set: BTreeSet<&Permutation> = images.iter().map(|(s, _)| s).collect();
        let target: BTreeSet<Permutation> = UpDownAvoiders::new(n).map(|a| a.into_perm()).collect();
        for s in target.iter().filter(|s| !image_set.contains(s)) {
            t.failures.push(Failure::new(s, "a preimage", "none"));
        }
        for s in image_set.iter().filter(|s| !target.contains(**s)) {
            t.failures.push(Failure::new(s, "not an image", "hit"));
        }
        if n == 3 {
            let printed: BTreeSet<Permutation> = LIST_A6
                .iter()
                .map(|s| {
                    Permutation::new(s.bytes().map(|b| (b - b'0') as usize).collect())
                        .expect("printed list")
                })
                .collect();
            let got: BTreeSet<Permutation> = image_set.into_iter().cloned().collect();
            if got != printed {
                let diff: Vec<String> = got
                    .symmetric_difference(&printed)
                    .map(|s| s.to_string())
                    .collect();
                t.failures.push(Failure::new(
                    "n=3",
                    "the printed list of 42",
                    diff.join(" "),
                ));
            }
        }
        t
    })
}

/// `invert` and the brute-force oracle both recover every path. The oracle's
/// table of images is built once per underlying path and shared by all of
/// its weightings.
fn roundtrip(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    let mut t = over_sizes(max_n, ctx, |n| {
        paths(n)
            .into_par_iter()
            .map(|p| {
                let index = match BruteIndex::new(p.clone(), rule) {
                    Ok(index) => index,
                    Err(e) => {
                        return Tally::fail(Failure::new(&p, "an image for every weighting", e))
                    }
                };
                let mut t = Tally::default();
                for wd in Weightings::new(p) {
                    if ctx.cancelled() {
                        break;
                    }
                    t.add(roundtrip_one(&wd, &index, rule));
                }
                t
            })
            .reduce(Tally::default, Tally::merge)
    });
    t.add(check_fixture_list(&FIXTURES, rule));
    t
}

fn roundtrip_one(wd: &WeightedDyckPath, index: &BruteIndex, rule: SplitRule) -> Tally {
    let s = match image(wd, rule) {
        Ok(s) => s,
        Err(f) => return Tally::fail(f),
    };
    let mut failures = Vec::new();
    match invert(&s, rule) {
        Ok(back) if &back == wd => {}
        Ok(back) => failures.push(Failure::new(&s, wd, &back)),
        Err(e) => failures.push(Failure::new(&s, wd, format!("invert: {e}"))),
    }
    let read_off = DyckPath::from_up_positions(
        s.len(),
        &s.as_slice().iter().step_by(2).copied().collect::<Vec<_>>(),
    );
    let brute = match read_off {
        Ok(q) if &q == index.path() => index.lookup(&s),
        _ => invert_brute(&s, usize::MAX, rule),
    };
    match brute {
        Ok(back) if &back == wd => {}
        Ok(back) => failures.push(Failure::new(&s, wd, format!("brute: {back}"))),
        Err(e) => failures.push(Failure::new(&s, wd, format!("brute: {e}"))),
    }
    Tally {
        checked: 1,
        failures,
    }
}

fn schutzenberger(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    over_sizes(max_n, ctx, |n| {
        each_wd(n, false, ctx, |wd| {
            match (image(wd, rule), image(&wd.reflect(), rule)) {
                (Ok(s), Ok(r)) => {
                    let expected = s.schutzenberger();
                    Tally::check(r == expected, || Failure::new(wd, &expected, &r))
                }
                (Err(f), _) | (_, Err(f)) => Tally::fail(f),
            }
        })
    })
}

/// All pairs `p`, `q` with semilengths summing to at most `max_n`.
fn product(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    let by_size: Vec<Vec<(WeightedDyckPath, Permutation)>> = (0..=max_n)
        .map(|n| {
            paths(n)
                .into_iter()
                .flat_map(Weightings::new)
                .filter_map(|wd| image(&wd, rule).ok().map(|s| (wd, s)))
                .collect()
        })
        .collect();
    let mut t = Tally::default();
    for a in 0..=max_n {
        for b in 0..=max_n - a {
            if ctx.cancelled() {
                return t;
            }
            let right = &by_size[b];
            t.add(
                by_size[a]
                    .par_iter()
                    .map(|(p, sp)| {
                        let mut t = Tally::default();
                        for (q, sq) in right {
                            let pq = p.concat(q);
                            let expected = sq.shifted_concat(sp);
                            t.add(match image(&pq, rule) {
                                Ok(got) => Tally::check(got == expected, || {
                                    Failure::new(format!("{p} . {q}"), &expected, &got)
                                }),
                                Err(f) => Tally::fail(f),
                            });
                        }
                        t
                    })
                    .reduce(Tally::default, Tally::merge),
            );
        }
    }
    t
}

fn statistic(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    over_sizes(max_n, ctx, |n| {
        each_wd(n, false, ctx, |wd| match beta(wd, rule) {
            Ok(s) => {
                let mut bot = s.bot();
                bot.sort_unstable();
                let ups = wd.path().up_positions();
                Tally::check(bot == ups, || {
                    Failure::new(wd, format!("{ups:?}"), format!("{bot:?}"))
                })
            }
            Err(e) => Tally::fail(Failure::new(wd, "an image", format!("error: {e}"))),
        })
    })
}

/// Lexicographic successor in place; false after the last permutation.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every permutation of every even size up to `2 * max_n`.
fn criteria(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    over_sizes(max_n, ctx, |n| {
        let size = 2 * n;
        if size == 0 {
            let e = Permutation::identity(0);
            let holds = criteria_borie(&e).map(|c| c.holds()).unwrap_or(false);
            return Tally::check(holds, || Failure::new("", true, false));
        }
        (1..=size)
            .into_par_iter()
            .map(|first| {
                let mut rest: Vec<usize> = (1..=size).filter(|&v| v != first).collect();
                let mut t = Tally::default();
                loop {
                    if ctx.cancelled() {
                        break;
                    }
                    let mut one_line = Vec::with_capacity(size);
                    one_line.push(first);
                    one_line.extend_from_slice(&rest);
                    let sigma = Permutation::from_vec_unchecked(one_line);
                    let member = sigma.is_up_down() && sigma.avoids_1234();
                    let c = criteria_borie(&sigma).expect("even size");
                    t.add(Tally::check(c.holds() == member, || {
                        Failure::new(
                            &sigma,
                            format!("criteria {}", member),
                            format!(
                                "criteria {} (c1={} c2={} c3={} c4={})",
                                c.holds(),
                                c.c1,
                                c.c2,
                                c.c3,
                                c.c4
                            ),
                        )
                    }));
                    if !next_permutation(&mut rest) {
                        break;
                    }
                }
                t
            })
            .reduce(Tally::default, Tally::merge)
    })
}

/// No insertion overflows, every non-jump distance is at least the shift,
/// and at a fixed step with fixed earlier weights, different non-jump
/// weights give different distances.
fn insertion_lemma(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    over_sizes(max_n, ctx, |n| {
        irreducible_paths(n)
            .into_par_iter()
            .map(|p| {
                let mut t = Tally::default();
                // (step, earlier weights) -> weight -> distance
                let mut seen: HashMap<(usize, Vec<usize>), HashMap<usize, usize>> = HashMap::new();
                for wd in Weightings::new(p) {
                    if ctx.cancelled() {
                        break;
                    }
                    let trace = match ins(&wd, rule) {
                        Ok((_, trace)) => trace,
                        Err(e) => {
                            t.add(Tally::fail(Failure::new(&wd, "no overflow", e)));
                            continue;
                        }
                    };
                    for s in &trace.steps {
                        let Some(dist) = s.distance else { continue };
                        if dist < s.shift {
                            t.failures.push(Failure::new(
                                &wd,
                                format!("distance >= shift {} at step {}", s.shift, s.position),
                                dist,
                            ));
                        }
                        let key = (s.position, wd.weights()[..s.position - 1].to_vec());
                        let by_weight = seen.entry(key).or_default();
                        let clash = by_weight
                            .iter()
                            .find(|&(&w, &d)| (w == s.weight) != (d == dist));
                        if let Some((&w, &d)) = clash {
                            t.failures.push(Failure::new(
                                &wd,
                                format!("step {}: weight {w} at distance {d}", s.position),
                                format!("weight {} at distance {dist}", s.weight),
                            ));
                        }
                        by_weight.insert(s.weight, dist);
                    }
                    t.checked += 1;
                }
                t
            })
            .reduce(Tally::default, Tally::merge)
    })
}

fn transformation(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    let mut t = over_sizes(max_n, ctx, |n| {
        each_wd(n, true, ctx, |wd| {
            let pf = match to_single_slope(wd, rule) {
                Ok(pf) => pf,
                Err(e) => return Tally::fail(Failure::new(wd, "a parking function", e)),
            };
            let bot = match ins(wd, rule) {
                Ok((w, _)) => w.standardize(),
                Err(e) => return Tally::fail(Failure::new(wd, "a bottom word", e)),
            };
            let got = parking_to_123avoiding(&pf);
            Tally::check(got == bot, || Failure::new(wd, &bot, &got))
        })
    });
    let fig: WeightedDyckPath = FIXTURES[0].path.parse().expect("fixture parses");
    let expected_pf = [0, 0, 2, 2, 4, 4, 5];
    let expected_perm = "6,4,7,5,2,3,1";
    t.add(match to_single_slope(&fig, rule) {
        Ok(pf) => {
            let perm = parking_to_123avoiding(&pf).to_string();
            Tally::check(pf.values() == expected_pf && perm == expected_perm, || {
                Failure::new(
                    &fig,
                    format!("{expected_pf:?} -> {expected_perm}"),
                    format!("{pf} -> {perm}"),
                )
            })
        }
        Err(e) => Tally::fail(Failure::new(&fig, format!("{expected_pf:?}"), e)),
    });
    t
}

/// The parking correspondence is a bijection onto 123-avoiding permutations.
fn parking(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    over_sizes(max_n, ctx, |n| {
        let pfs = parking_functions(n);
        let mut t = Tally::default();
        let mut images = BTreeSet::new();
        for pf in &pfs {
            let s = parking_to_123avoiding(pf);
            t.add(Tally::check(avoids_123(s.as_slice()), || {
                Failure::new(pf, "avoids 123", &s)
            }));
            if !images.insert(s.clone()) {
                t.failures.push(Failure::new(pf, "distinct image", &s));
            }
        }
        let mut all: Vec<usize> = (1..=n).collect();
        let mut avoiders = BTreeSet::new();
        loop {
            if avoids_123(&all) {
                avoiders.insert(Permutation::from_vec_unchecked(all.clone()));
            }
            if !next_permutation(&mut all) {
                break;
            }
        }
        if images != avoiders {
            t.failures.push(Failure::new(
                format!("n={n}"),
                format!("{} 123-avoiding permutations", avoiders.len()),
                format!("{} images", images.len()),
            ));
        }
        t
    })
}

fn topword_equivalence(max_n: usize, ctx: &Ctx<'_>) -> Tally {
    let rule = ctx.rule;
    over_sizes(max_n, ctx, |n| {
        each_wd(n, true, ctx, |wd| {
            let expected = ins(&wd.reflect(), rule).map(|(w, _)| {
                schutzenberger_word(w.letters(), wd.len()).expect("letters in range")
            });
            match (expected, topword_direct(wd, rule)) {
                (Ok(e), Ok(d)) => Tally::check(e == d.letters(), || {
                    Failure::new(wd, format!("{e:?}"), format!("{:?}", d.letters()))
                }),
                (Err(e), _) => Tally::fail(Failure::new(wd, "a top word", e)),
                (_, Err(e)) => Tally::fail(Failure::new(wd, "a direct top word", e)),
            }
        })
    })
}

fn check_fixture_list(fixtures: &[Fixture], rule: SplitRule) -> Tally {
    let mut t = Tally::default();
    for fx in fixtures {
        let wd: WeightedDyckPath = match fx.path.parse() {
            Ok(wd) => wd,
            Err(e) => {
                t.add(Tally::fail(Failure::new(
                    fx.path,
                    fx.perm,
                    format!("invalid: {e}"),
                )));
                continue;
            }
        };
        let got = match beta(&wd, rule) {
            Ok(s) => s.to_string(),
            Err(e) => format!("error: {e}"),
        };
        if got != fx.perm {
            t.add(Tally::fail(Failure::new(fx.path, fx.perm, got)));
            continue;
        }
        let back = fx
            .perm
            .parse::<Permutation>()
            .map_err(|e| e.to_string())
            .and_then(|s| invert(&s, rule).map_err(|e| e.to_string()));
        t.add(match back {
            Ok(back) => Tally::check(back == wd, || Failure::new(fx.perm, fx.path, &back)),
            Err(e) => Tally::fail(Failure::new(fx.perm, fx.path, e)),
        });
    }
    t
}

/// Maps each fixture forward and back; a corrupted fixture shows up as a
/// failure whose input is the fixture text.
pub fn check_fixtures(fixtures: &[Fixture], rule: SplitRule) -> VerificationReport {
    let start = std::time::Instant::now();
    let Tally {
        checked,
        mut failures,
    } = check_fixture_list(fixtures, rule);
    failures.sort();
    let verdict = if failures.is_empty() {
        super::Verdict::Pass
    } else {
        super::Verdict::Fail
    };
    VerificationReport {
        suite: SuiteId::Roundtrip,
        n_range: [
            0,
            fixtures
                .iter()
                .map(|f| f.path.split(';').next().unwrap_or("").len() / 2)
                .max()
                .unwrap_or(0),
        ],
        split_rule: rule,
        checked,
        failure_count: failures.len() as u64,
        failures,
        elapsed: start.elapsed(),
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{run_suite, RunOptions, Verdict};

    #[test]
    fn permutation_successor() {
        let mut v = vec![1, 2, 3];
        let mut all = vec![v.clone()];
        while next_permutation(&mut v) {
            all.push(v.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap(), &vec![3, 2, 1]);
        assert!(!next_permutation(&mut []));
    }

    #[test]
    fn bijectivity_at_three_matches_printed_list() {
        let r = run_suite(SuiteId::Bijectivity, 3, &RunOptions::default());
        assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.failures);
        assert_eq!(r.checked, 1 + 1 + 5 + 42);
    }

    #[test]
    fn fixtures_pass_and_corruption_is_named() {
        assert!(check_fixtures(&FIXTURES, SplitRule::CeilHalf).passed());
        let bad = [Fixture {
            path: "UUDD;0,1,0,0",
            perm: "2,4,1,3",
        }];
        let r = check_fixtures(&bad, SplitRule::CeilHalf);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failures[0].input, "UUDD;0,1,0,0");
    }

    #[test]
    fn criteria_fail_already_at_size_two() {
        let r = run_suite(SuiteId::Criteria, 1, &RunOptions::default());
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].input, "2,1");
    }
}
