//! One line per acceptance criterion. Exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use qhall::runner::run_suite_parallel;
use qhall_core::closedform::Mutation;
use qhall_core::enumerate::{gf_oracle, Family, Statistic};
use qhall_core::qseries::{Grading, Monomial, Var};
use qhall_core::verify::{CheckId, CheckReport, SuiteConfig};

use CheckId::*;

struct Outcome {
    passed: bool,
    detail: String,
}

fn config(nmax: u32, order: u64, only: &[CheckId]) -> SuiteConfig {
    SuiteConfig {
        nmax,
        order,
        only: only.to_vec(),
        ..SuiteConfig::default()
    }
}

/// Every planned instance passes, there is at least one, and the run fits
/// in `limit`.
fn all_pass(configs: &[SuiteConfig], limit: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let reports: Vec<CheckReport> = configs.iter().flat_map(run_suite_parallel).collect();
    let elapsed = start.elapsed();
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let mut detail = format!("{} instances, {} failed, {:.2} s", reports.len(), failed.len(), elapsed.as_secs_f64());
    if let Some(l) = limit {
        detail += &format!(" (limit {} s)", l.as_secs());
    }
    if let Some(r) = failed.first() {
        detail += &format!("; first failure: {}", r);
    }
    Outcome {
        passed: !reports.is_empty() && failed.is_empty() && in_time,
        detail,
    }
}

fn l21_is_geometric() -> bool {
    let order = 15;
    let family = Family::LectureHall { n: 2, k: 1 };
    let got = gf_oracle(&family, &[(Statistic::Weight, Monomial::from(Var::Q))], Grading::q(order)).unwrap();
    let want: Vec<String> = (0..=order)
        .map(|d| match d {
            0 => "1".to_string(),
            1 => "q".to_string(),
            _ => format!("q^{}", d),
        })
        .collect();
    got.to_string() == want.join(" + ")
}

fn eq6_eq7() -> Outcome {
    let mut o = all_pass(&[config(6, 15, &[Eq6, Eq7, RtlhBar])], None);
    let geometric = l21_is_geometric();
    o.detail += &format!("; L_(2,1)(q) = 1/(1-q): {}", geometric);
    o.passed &= geometric;
    o
}

fn mutation() -> Outcome {
    let mut c = config(5, 15, &[Eq6]);
    c.options.mutation = Some(Mutation::DropTriangularPrefactor);
    let reports = run_suite_parallel(&c);
    let caught = reports
        .iter()
        .filter(|r| !r.passed())
        .filter_map(|r| r.witness.as_ref().map(|w| (r, w.exps.get(Var::Q))))
        .min_by_key(|(_, d)| *d);
    match caught {
        Some((r, d)) => Outcome {
            passed: d <= 3,
            detail: format!("lowest witness q-degree {}: {}", d, r),
        },
        None => Outcome {
            passed: false,
            detail: "no EQ6 instance failed under the mutation".into(),
        },
    }
}

fn full_suite() -> Outcome {
    all_pass(&[SuiteConfig::default()], Some(Duration::from_secs(60)))
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("EQ1 n<=6 order 20", Box::new(|| all_pass(&[config(6, 20, &[Eq1])], Some(Duration::from_secs(5))))),
        (
            "EQ3/EQ4 n<=5 order 15",
            Box::new(|| all_pass(&[config(5, 15, &[Eq3, Eq4])], Some(Duration::from_secs(20)))),
        ),
        ("EQ6/EQ7 n<=6 order 15", Box::new(eq6_eq7)),
        (
            "EQ2/EQ8/EQ9/EQ10 odd/even n<=6 order 14",
            Box::new(|| all_pass(&[config(6, 14, &[Eq2, Eq8, Eq9, Eq10, OetlhBar])], None)),
        ),
        ("COMBI n<=6 weight<=20", Box::new(|| all_pass(&[config(6, 20, &[Combi])], None))),
        (
            "bijections n<=5 weight<=10",
            Box::new(|| all_pass(&[config(5, 10, &[Bme, BmeNk, ThetaNk])], None)),
        ),
        ("q-Chu I/II n<=6 order 20", Box::new(|| all_pass(&[config(6, 20, &[QChuI, QChuII])], None))),
        (
            "recurrences n<=5 order 12",
            Box::new(|| {
                let ids = [
                    Lu3, Prop2, Lnrec, Map1, Map2, Bmeb, Bmeb1, L2krecurr, A2krecurr, Oddeq, Irecurr, Lu2, Au2, Aun,
                    Need, Au3,
                ];
                all_pass(&[config(5, 12, &ids)], None)
            }),
        ),
        (
            "finitizations",
            Box::new(|| {
                all_pass(
                    &[
                        config(6, 15, &[Ident1, Ident2]),
                        config(5, 12, &[Ident2Lim, Ref1, Ref2, Ref2Plus, Fin3, Transpose, Aident, Concl1, Concl2]),
                    ],
                    None,
                )
            }),
        ),
        ("mutation caught by EQ6 at q-degree <= 3", Box::new(mutation)),
        ("full suite under 60 s", Box::new(full_suite)),
    ];
    let mut failures = 0;
    for (name, run) in &criteria {
        let o = run();
        if !o.passed {
            failures += 1;
        }
        println!("{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, name, o.detail);
    }
    println!("{}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
