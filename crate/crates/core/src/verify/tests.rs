use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::closedform::{build, ClosedForm, FormId, Mutation, Params};
use crate::enumerate::{gf_oracle, Family, Statistic};
use crate::qseries::{eval_sum, Exps, Grading, Length, Product, Var};

fn run(id: CheckId, params: CheckParams, order: u64) -> CheckReport {
    run_check(&CheckSpec::new(id, params, order), &BuildOptions::default()).unwrap()
}

fn pass(id: CheckId, params: CheckParams, order: u64) {
    let r = run(id, params, order);
    assert!(r.passed(), "{}", r);
}

fn q(e: i32) -> Monomial {
    Var::Q.pow(e)
}

#[test]
fn examples() {
    pass(CheckId::Eq1, CheckParams::n(2), 10);
    pass(CheckId::Eq5, CheckParams::n(2), 8);
    pass(CheckId::Combi, CheckParams::nk(2, 1), 8);
    pass(CheckId::Ref2, CheckParams::k(2), 12);
    pass(CheckId::Lu3, CheckParams::n(3), 10);
    pass(CheckId::Map1, CheckParams::nk(3, 1), 8);
    pass(CheckId::Lnrec, CheckParams::n(1), 6);
    pass(CheckId::QChuII, CheckParams::n(2), 10);
    let (a, c) = (Monomial::from_pairs(-1, &[(Var::U, 1), (Var::Q, 1), (Var::V, -1)]), Var::U.pow(2) * q(2));
    assert!(check_qchu(QChuVariant::I, &a, &c, 3, 12).unwrap().passed());
    assert!(check_qchu(QChuVariant::I, &a, &c, 0, 12).unwrap().passed());
}

#[test]
fn qchu_generic_arguments() {
    // a = q^2, c = q^5: every term is a power series in q
    for n in 0..=4 {
        let r = check_qchu(QChuVariant::I, &q(2), &q(5), n, 12).unwrap();
        assert!(r.passed(), "{}", r);
    }
    // the terms of the second summation carry negative powers of q
    assert!(check_qchu(QChuVariant::II, &q(2), &q(5), 2, 12).is_err());
}

#[test]
fn coefficient_examples() {
    let g = Grading::q(10);
    let s = build(&ClosedForm::new(FormId::LhpQ, Params::n(2)), g).unwrap();
    assert_eq!(s.coefficient(&Exps::from_pairs(&[(Var::Q, 3)])).unwrap(), 2.into());
    let ones = crate::qseries::Subst::identity().with(Var::U, Monomial::one()).with(Var::V, Monomial::one());
    let s = build(&ClosedForm::new(FormId::AlhUvq, Params::n(2)).with_args(ones), g).unwrap();
    assert_eq!(s.coefficient(&Exps::from_pairs(&[(Var::Q, 2)])).unwrap(), 2.into());
}

#[test]
fn domain_errors() {
    let spec = CheckSpec::new(CheckId::Map1, CheckParams::nk(2, 1), 8);
    assert!(matches!(run_check(&spec, &BuildOptions::default()), Err(Error::Domain(_))));
    let spec = CheckSpec::new(CheckId::Eq6, CheckParams::n(2), 8);
    assert!(run_check(&spec, &BuildOptions::default()).is_err());
    let r = run_check_report(&spec, &BuildOptions::default());
    assert!(!r.passed() && r.note.unwrap().starts_with("error:"));
}

#[test]
fn suite_filter_and_order_zero() {
    let only = SuiteConfig {
        only: vec![CheckId::Eq8],
        ..SuiteConfig::default()
    };
    let reports = run_suite(&only);
    assert!(!reports.is_empty() && reports.iter().all(|r| r.check_id == CheckId::Eq8 && r.passed()));
    let zero = SuiteConfig {
        order: 0,
        nmax: 3,
        kmax: 2,
        bijection_weight: 0,
        ..SuiteConfig::default()
    };
    let reports = run_suite(&zero);
    assert!(reports.iter().all(|r| r.passed()), "{}", summary(&reports));
}

#[test]
fn default_suite_passes() {
    let reports = run_suite(&SuiteConfig::default());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    assert!(failed.is_empty(), "{:?}", failed);
    for id in CheckId::ALL {
        assert!(reports.iter().any(|r| r.check_id == *id), "{} never runs", id);
    }
}

#[test]
fn mutation_is_caught() {
    let opts = BuildOptions {
        mutation: Some(Mutation::DropTriangularPrefactor),
        ..BuildOptions::default()
    };
    for order in 1..=3 {
        let spec = CheckSpec::new(CheckId::Eq6, CheckParams::nk(3, 2), order);
        let r = run_check(&spec, &opts).unwrap();
        let w = r.witness.expect("a witness");
        assert!(w.exps.get(Var::Q) <= 3);
    }
}

#[test]
fn comparisons_are_symmetric() {
    let a = gf_oracle(&Family::lecture_hall(3), &[(Statistic::Weight, q(1))], Grading::q(8)).unwrap();
    let b = build(&ClosedForm::new(FormId::LhpQ, Params::n(2)), Grading::q(8)).unwrap();
    let spec = CheckSpec::new(CheckId::Eq1, CheckParams::n(3), 8);
    let one = verdict(&spec, vec![cmp("x", a.clone(), b.clone())], None).unwrap();
    let two = verdict(&spec, vec![cmp("x", b, a)], None).unwrap();
    assert_eq!(one.status, two.status);
    let (w1, w2) = (one.witness.unwrap(), two.witness.unwrap());
    assert_eq!((w1.exps, &w1.left, &w1.right), (w2.exps, &w2.right, &w2.left));
}

#[test]
fn report_text() {
    let r = run(CheckId::Eq6, CheckParams::nk(2, 1), 4);
    assert_eq!(r.to_string(), "pass EQ6(n=2,k=1) order=4");
    assert_eq!(CheckId::from_name("ref2plus"), Some(CheckId::Ref2Plus));
    let mut p = CheckParams::default();
    p.set("mu", "(2,1)").unwrap();
    p.set("n", "3").unwrap();
    assert_eq!(p.to_string(), "n=3,mu=(2,1)");
}

// Alternative readings of printed formulas, each shown to disagree with the
// enumeration.

fn fin(m: u32) -> Length {
    Length::Finite(m as usize)
}

#[test]
fn pochhammer_sign_in_truncated_sum_matters() {
    // (q^{n-m+1};q)_m in place of (-q^{n-m+1};q)_m
    let (n, k, g) = (4u32, 3u32, Grading::q(12));
    let mut terms = Vec::new();
    for m in 0..=k {
        terms.push(
            Product::new(q((m * (m + 1) / 2) as i32))
                .gaussian(n as usize, m as usize, q(1))
                .poch(q((n - m + 1) as i32), q(1), fin(m))
                .over_poch(q((2 * n - m + 1) as i32), q(1), fin(m)),
        );
    }
    let literal = eval_sum(&terms, g).unwrap();
    let oracle = gf_oracle(&Family::LectureHall { n, k }, &[(Statistic::Weight, q(1))], g).unwrap();
    assert!(literal.first_difference(&oracle).unwrap().is_some());
}

#[test]
fn limit_denominator_is_q_q() {
    let (k, g) = (3u32, Grading::q(12));
    let d = gf_oracle(&Family::Distinct { k, at_most: false }, &[(Statistic::Weight, q(1))], g).unwrap();
    let literal = Product::new(q(6)).over_poch(q(1), q(2), fin(k)).eval(g).unwrap();
    assert!(literal.first_difference(&d).unwrap().is_some());
    pass(CheckId::Ident2Lim, CheckParams::k(k), 12);
}

#[test]
fn odd_even_exponents_are_odd_and_even() {
    // y^{|lambda_o|} in place of y^{|lambda_e|}
    let g = Grading::xy(8);
    let xy = Var::X.pow(1) * Var::Y.pow(1);
    let both = [(Statistic::OddIndexSum, xy)];
    for (form, fam) in [
        (FormId::TlhXy, Family::LectureHall { n: 3, k: 2 }),
        (FormId::TalhXy, Family::AntiLectureHall { n: 3, k: 2, last: None }),
    ] {
        let closed = build(&ClosedForm::new(form, Params::nk(3, 2)), g).unwrap();
        let literal = gf_oracle(&fam, &both, g).unwrap();
        assert!(closed.first_difference(&literal).unwrap().is_some());
    }
}

#[test]
fn restricted_set_ends_at_the_first_excluded_odd() {
    // l = n - f instead of n - f + 1
    let (n, k, g) = (4u32, 2u32, Grading::q(14));
    let params = Params {
        n: Some(n),
        t: Some(1),
        j: Some(1),
        l: Some(n - 1),
        ..Params::default()
    };
    let literal = build(&ClosedForm::new(FormId::RExactT, params), g)
        .unwrap()
        .div_one_minus(&q((2 * n - 1) as i32))
        .unwrap();
    let oracle = gf_oracle(&Family::LectureHallBar { n, k, last: None }, &[(Statistic::Weight, q(1))], g).unwrap();
    assert!(literal.first_difference(&oracle).unwrap().is_some());
    pass(CheckId::Ref2Plus, CheckParams::nk(n, k), 14);
}

#[test]
fn alternative_readings_are_reported() {
    let note = |r: CheckReport| r.note.unwrap_or_default();
    assert!(note(run(CheckId::Fin3, CheckParams::k(1), 8)).contains("disagrees"));
    assert!(note(run(CheckId::A2krecurr, CheckParams::nk(3, 1), 8)).contains("disagrees"));
    assert!(note(run(CheckId::Bmeb, CheckParams::nki(3, 1, 1), 8)).contains("disagrees"));
}
