use num_bigint::BigInt;
use proptest::prelude::*;

use qhall_core::closedform::{build, ClosedForm, FormId, Params};
use qhall_core::enumerate::{gf_oracle, mu_r_decompose, reconstruct, Family, Statistic};
use qhall_core::qseries::{
    gaussian_poly, multinomial_poly, pochhammer, GradedSeries, Grading, Length, Monomial, Product, Var,
};

fn grading() -> Grading {
    Grading::new(&[(Var::Q, 1), (Var::X, 1)], 6)
}

fn series() -> impl Strategy<Value = GradedSeries> {
    prop::collection::vec((-3i64..=3, 0i32..=3, 0i32..=3), 0..6).prop_map(|terms| {
        let ms = terms
            .into_iter()
            .map(|(c, a, b)| Monomial::from_pairs(c, &[(Var::Q, a), (Var::X, b)]));
        GradedSeries::from_monomials(ms, grading()).unwrap()
    })
}

fn binomial(n: usize, m: usize) -> BigInt {
    (0..m).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

proptest! {
    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&GradedSeries::one(grading())).unwrap(), a.clone());
    }

    #[test]
    fn one_minus_round_trip(a in series(), e in 1i32..=3) {
        let m = Var::Q.pow(e);
        prop_assert_eq!(a.mul_one_minus(&m).unwrap().div_one_minus(&m).unwrap(), a);
    }

    #[test]
    fn gaussian_counts_box_paths(n in 0usize..=10, m in 0usize..=10) {
        prop_assume!(m <= n);
        let p = gaussian_poly(n, m);
        prop_assert_eq!(p.iter().sum::<BigInt>(), binomial(n, m));
        prop_assert_eq!(p.len(), m * (n - m) + 1);
        let rev: Vec<BigInt> = p.iter().rev().cloned().collect();
        prop_assert_eq!(rev, p);
    }

    #[test]
    fn multinomial_is_product_of_gaussians(parts in prop::collection::vec(0usize..=3, 1..4)) {
        let n: usize = parts.iter().sum();
        let p = multinomial_poly(n, &parts).unwrap();
        let expect = parts.iter().fold(factorial(n), |acc, &k| acc / factorial(k));
        prop_assert_eq!(p.iter().sum::<BigInt>(), expect);
        let g = Grading::q(40);
        let q = Monomial::from(Var::Q);
        let direct = Product::default().multinomial(n, &parts, q.clone()).unwrap().eval(g).unwrap();
        let mut chained = Product::default();
        let mut left = n;
        for &k in &parts {
            chained = chained.gaussian(left, k, q.clone());
            left -= k;
        }
        prop_assert_eq!(direct, chained.eval(g).unwrap());
    }

    #[test]
    fn pochhammer_is_a_product(a in 0i32..=3, step in 1i32..=2, len in 0usize..=5) {
        let g = Grading::q(12);
        let am = Monomial::from_pairs(-1, &[(Var::Q, a)]);
        let got = pochhammer(&am, &Var::Q.pow(step), Length::Finite(len), g).unwrap();
        let mut want = GradedSeries::one(g);
        for i in 0..len as i32 {
            want = want.mul_one_minus(&Monomial::from_pairs(-1, &[(Var::Q, a + i * step)])).unwrap();
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn decompose_round_trip(n in 1u32..=4, w in 0u64..=12, pick in 0usize..1000, anti in any::<bool>()) {
        let fam = if anti { Family::anti_lecture_hall(n) } else { Family::lecture_hall(n) };
        let members = fam.enumerate(w).unwrap();
        let seq = &members[pick % members.len()];
        let d = mu_r_decompose(&fam, &seq.parts).unwrap();
        prop_assert_eq!(reconstruct(&fam, &d).unwrap(), seq.parts.clone());
    }
}

#[test]
fn truncations_nest() {
    for n in 1..=4u32 {
        for k in 0..n {
            let small = Family::LectureHall { n, k }.enumerate(10).unwrap();
            let big = Family::LectureHall { n, k: k + 1 };
            for s in small {
                let mut p = s.parts.clone();
                p.push(0);
                assert!(big.check(&p).is_ok(), "{:?} in L({},{})", p, n, k + 1);
            }
        }
    }
}

#[test]
fn every_member_passes_the_membership_test() {
    let fams = [
        Family::lecture_hall(4),
        Family::LectureHallBar { n: 4, k: 3, last: None },
        Family::anti_lecture_hall(3),
        Family::AntiLectureHall { n: 3, k: 2, last: Some(2) },
        Family::RestrictedOdd { n: 3, k: 2 },
        Family::Distinct { k: 3, at_most: false },
    ];
    for f in fams {
        for s in f.enumerate(12).unwrap() {
            assert!(f.check(&s.parts).is_ok(), "{} in {}", s, f);
        }
    }
}

#[test]
fn distinct_parts_lean_odd() {
    for k in 0..=4 {
        for s in (Family::Distinct { k, at_most: false }).enumerate(20).unwrap() {
            let (o, e) = s.parts.iter().enumerate().fold((0, 0), |(o, e), (i, &x)| {
                if i % 2 == 0 {
                    (o + x, e)
                } else {
                    (o, e + x)
                }
            });
            assert!(o >= e);
        }
    }
}

/// Partitions into at most `len` parts with weight at most `w`, padded.
fn partitions(len: usize, w: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, cap: u32, w: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..=cap.min(w) {
            cur.push(x);
            go(len, x, w - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, w, w, &mut Vec::new(), &mut out);
    out
}

#[test]
fn image_sums_recover_the_full_series() {
    let g = Grading::q(8);
    for n in 0..=3u32 {
        for (form, image, whole) in [(FormId::LMu, true, FormId::LhpUvq), (FormId::AMu, false, FormId::AlhUvq)] {
            let mut sum = GradedSeries::zero(g);
            for mu in partitions(n as usize, 8) {
                let w: u32 = mu.iter().sum();
                let o = mu.iter().filter(|&&x| x % 2 == 1).count() as i32;
                let pre = Monomial::from_pairs(1, &[(Var::U, w as i32), (Var::V, o)]);
                let s = build(&ClosedForm::new(form, Params::n(n).with_mu(mu)), g).unwrap();
                sum = sum.add(&s.scale_monomial(&pre).unwrap()).unwrap();
            }
            let full = build(&ClosedForm::new(whole, Params::n(n)), g).unwrap();
            assert_eq!(sum, full, "n={} image={}", n, image);
        }
    }
}

#[test]
fn oracle_weight_totals_match_closed_forms() {
    let g = Grading::q(12);
    let q = [(Statistic::Weight, Var::Q.pow(1))];
    for n in 0..=4 {
        for k in 0..=n {
            let a = gf_oracle(&Family::LectureHall { n, k }, &q, g).unwrap();
            let b = gf_oracle(&Family::RestrictedOdd { n, k }, &q, g).unwrap();
            assert_eq!(a, b, "n={} k={}", n, k);
        }
    }
}
