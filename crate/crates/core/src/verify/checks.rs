use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{cmp, verdict, CheckId, CheckReport, CheckSpec, Comparison};
use crate::bijections::{verify_bijection, MapId};
use crate::closedform::{build_with, BuildOptions, ClosedForm, Fin3Length, FormId, Params};
use crate::enumerate::{gf_oracle, gf_oracle_filtered, statistics, Family, PartSequence, Statistic};
use crate::qseries::{eval_sum, GradedSeries, Grading, Length, Monomial, Product, Subst, Var};
use crate::{Error, Result};

type Assign = Vec<(Statistic, Monomial)>;

fn mono(pairs: &[(Var, i32)]) -> Monomial {
    Monomial::from_pairs(1, pairs)
}

fn x() -> Monomial {
    Var::X.into()
}

fn q() -> Monomial {
    Var::Q.into()
}

fn w_q() -> Assign {
    vec![(Statistic::Weight, q())]
}

fn w_xy() -> Assign {
    vec![(Statistic::OddIndexSum, x()), (Statistic::EvenIndexSum, Var::Y.into())]
}

/// `x^{|lambda_o|} y^{|lambda_e|}` after `x -> x^2 y`, `y -> 1/x`.
fn w_xy_sub() -> Assign {
    vec![
        (Statistic::OddIndexSum, mono(&[(Var::X, 2), (Var::Y, 1)])),
        (Statistic::EvenIndexSum, Var::X.pow(-1)),
    ]
}

/// `z^{|lambda_o| - |lambda_e|} q^{|lambda|}`
fn w_zq() -> Assign {
    vec![
        (Statistic::Weight, q()),
        (Statistic::OddIndexSum, Var::Z.into()),
        (Statistic::EvenIndexSum, Var::Z.pow(-1)),
    ]
}

fn w_uvq_ceil() -> Assign {
    vec![
        (Statistic::Weight, q()),
        (Statistic::CeilWeight, Var::U.into()),
        (Statistic::CeilOddCount, Var::V.into()),
    ]
}

fn w_uvq_floor() -> Assign {
    vec![
        (Statistic::Weight, q()),
        (Statistic::FloorWeight, Var::U.into()),
        (Statistic::FloorOddCount, Var::V.into()),
    ]
}

fn ones() -> Subst {
    Subst::identity().with(Var::U, Monomial::one()).with(Var::V, Monomial::one())
}

/// `x -> x^2 y`, `y -> 1/x`
fn bme_subst() -> Subst {
    Subst::identity()
        .with(Var::X, mono(&[(Var::X, 2), (Var::Y, 1)]))
        .with(Var::Y, Var::X.pow(-1))
}

/// `x -> zq`, `y -> q/z`
fn zq_subst() -> Subst {
    Subst::identity()
        .with(Var::X, mono(&[(Var::Z, 1), (Var::Q, 1)]))
        .with(Var::Y, mono(&[(Var::Z, -1), (Var::Q, 1)]))
}

fn cf(id: FormId, params: Params) -> ClosedForm {
    ClosedForm::new(id, params)
}

fn lh(n: u32, k: u32) -> Family {
    Family::LectureHall { n, k }
}

fn lbar(n: u32, k: u32, last: Option<u32>) -> Family {
    Family::LectureHallBar { n, k, last }
}

fn alh(n: u32, k: u32, last: Option<u32>) -> Family {
    Family::AntiLectureHall { n, k, last }
}

fn c_f(k: u32) -> (u32, u32) {
    (k.div_ceil(2), k / 2)
}

fn binom2(m: u32) -> i32 {
    (m * (m + 1) / 2) as i32
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

fn require(ok: bool, id: CheckId, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(domain(format!("{} needs {}", id, what)))
    }
}

/// `pre * cf` as a list of products.
fn times(pre: &Product, form: &ClosedForm, opts: &BuildOptions) -> Result<Vec<Product>> {
    Ok(form.products(opts)?.into_iter().map(|p| pre.clone().extend(p)).collect())
}

/// `m * s` where `m` may have negative grade: `s` must have been computed to
/// a bound raised by that deficit.
fn shift(s: &GradedSeries, m: &Monomial, target: Grading) -> Result<GradedSeries> {
    s.scale_into(m, target)
}

fn raised(g: Grading, by: i64) -> Grading {
    g.with_bound((g.max_grade() + by.max(0)) as u64)
}

/// Oracle over the members whose ceiling (or floor) image is `mu`.
fn oracle_image(family: Family, mu: &[u32], assign: &Assign, g: Grading, ceil: bool) -> Result<GradedSeries> {
    let mu = mu.to_vec();
    gf_oracle_filtered(&family, assign, g, move |parts| {
        let st = statistics(&PartSequence::new(parts.to_vec(), family));
        let img = if ceil { st.ceil_image } else { st.floor_image };
        img.as_deref() == Some(&mu[..])
    })
}

fn padded(mu: &[u32], n: u32) -> Result<Vec<u32>> {
    if mu.len() > n as usize || mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(domain(format!("mu must be a partition into at most {} parts", n)));
    }
    let mut v = mu.to_vec();
    v.resize(n as usize, 0);
    Ok(v)
}

/// `(m, |mu~|, o(mu~), mu~)` for `mu~` the positive parts of `mu` less one.
fn reduce(mu: &[u32]) -> (u32, i32, i32, Vec<u32>) {
    let tilde: Vec<u32> = mu.iter().filter(|&&p| p > 0).map(|&p| p - 1).collect();
    let w: u32 = tilde.iter().sum();
    let o = tilde.iter().filter(|&&p| p % 2 == 1).count();
    (tilde.len() as u32, w as i32, o as i32, tilde)
}

fn odd_count(mu: &[u32]) -> i32 {
    mu.iter().filter(|&&p| p % 2 == 1).count() as i32
}

/// Which q-Chu Vandermonde summation to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QChuVariant {
    /// `(c/a;q)_n/(c;q)_n = sum_m [n;m]_q (a;q)_m/(c;q)_m (-c/a)^m q^{C(m,2)}`
    I,
    /// `a^n (c/a;q)_n/(c;q)_n = sum_m (a;q)_m (q^-n;q)_m / ((c;q)_m (q;q)_m) q^m`
    II,
}

fn qchu_sides(variant: QChuVariant, a: &Monomial, c: &Monomial, n: u32) -> Result<(Product, Vec<Product>)> {
    let fin = |m: u32| Length::Finite(m as usize);
    let c_over_a = c * &a.inverse()?;
    let mut lhs = Product::default()
        .poch(c_over_a.clone(), q(), fin(n))
        .over_poch(c.clone(), q(), fin(n));
    if variant == QChuVariant::II {
        lhs = lhs.times(&a.pow(i64::from(n))?);
    }
    let mut rhs = Vec::new();
    for m in 0..=n {
        let p = Product::default().poch(a.clone(), q(), fin(m)).over_poch(c.clone(), q(), fin(m));
        rhs.push(match variant {
            QChuVariant::I => p
                .gaussian(n as usize, m as usize, q())
                .times(&c_over_a.neg().pow(i64::from(m))?)
                .times(&Var::Q.pow((m * m.saturating_sub(1) / 2) as i32)),
            QChuVariant::II => p
                .poch(Var::Q.pow(-(n as i32)), q(), fin(m))
                .over_poch(q(), q(), fin(m))
                .times(&Var::Q.pow(m as i32)),
        });
    }
    Ok((lhs, rhs))
}

/// The arguments the refined theorems are solved with.
pub(crate) fn qchu_default_args(variant: QChuVariant, n: u32) -> (Monomial, Monomial) {
    match variant {
        QChuVariant::I => (
            Monomial::from_pairs(-1, &[(Var::U, 1), (Var::Q, 1), (Var::V, -1)]),
            mono(&[(Var::U, 2), (Var::Q, 2)]),
        ),
        QChuVariant::II => (
            Monomial::from_pairs(-1, &[(Var::V, 1), (Var::Q, -(n as i32)), (Var::U, -1)]),
            mono(&[(Var::Q, -2 * n as i32), (Var::U, -2)]),
        ),
    }
}

/// Both sides of a q-Chu Vandermonde summation at `q`-order `order`, with
/// `u` and `v` ungraded. Factors of negative grade are rewritten as
/// `1 - m = -m (1 - 1/m)` before expansion.
pub fn check_qchu(variant: QChuVariant, a: &Monomial, c: &Monomial, n: u32, order: u64) -> Result<CheckReport> {
    let id = match variant {
        QChuVariant::I => CheckId::QChuI,
        QChuVariant::II => CheckId::QChuII,
    };
    let params = super::CheckParams {
        n: Some(n),
        a: Some(a.clone()),
        c: Some(c.clone()),
        ..super::CheckParams::default()
    };
    let spec = CheckSpec::new(id, params, order);
    run(&spec, &BuildOptions::default())
}

fn qchu(spec: &CheckSpec, variant: QChuVariant, opts: &BuildOptions) -> Result<Vec<Comparison>> {
    let p = &spec.params;
    let n = p.need("n", spec.id)?;
    let g = Grading::q(spec.order);
    let (a, c) = match (&p.a, &p.c) {
        (Some(a), Some(c)) => (a.clone(), c.clone()),
        (None, None) => qchu_default_args(variant, n),
        _ => return Err(domain(format!("{} needs both a and c, or neither", spec.id))),
    };
    let default = (a.clone(), c.clone()) == qchu_default_args(variant, n);
    let (lhs, rhs) = qchu_sides(variant, &a, &c, n)?;
    let lhs = lhs.eval(g)?;
    let mut out = vec![cmp("summation", lhs.clone(), eval_sum(&rhs, g)?)];
    if default {
        let id = match variant {
            QChuVariant::I => FormId::AlhUvq,
            QChuVariant::II => FormId::LhpUvq,
        };
        out.push(cmp("product side vs closed form", lhs, build_with(&cf(id, Params::n(n)), g, opts)?));
    }
    Ok(out)
}

pub(super) fn run(spec: &CheckSpec, opts: &BuildOptions) -> Result<CheckReport> {
    use CheckId as C;
    use FormId as F;
    let id = spec.id;
    let p = &spec.params;
    let d = spec.order;
    let (gq, gxy) = (Grading::q(d), Grading::xy(d));
    let n = || p.need("n", id);
    let k = || p.need("k", id);
    let i = || p.need("i", id);
    let b = |form: ClosedForm, g: Grading| build_with(&form, g, opts);
    let mut note: Option<String> = None;

    let comparisons: Vec<Comparison> = match id {
        C::Eq1 => {
            let n = n()?;
            vec![cmp("closed form vs L_n", b(cf(F::LhpQ, Params::n(n)), gq)?, gf_oracle(&Family::lecture_hall(n), &w_q(), gq)?)]
        }
        C::Eq2 => {
            let n = n()?;
            vec![cmp("closed form vs L_n", b(cf(F::LhpXy, Params::n(n)), gxy)?, gf_oracle(&Family::lecture_hall(n), &w_xy(), gxy)?)]
        }
        C::Eq3 => {
            let n = n()?;
            vec![cmp(
                "closed form vs L_n",
                b(cf(F::LhpUvq, Params::n(n)), gq)?,
                gf_oracle(&Family::lecture_hall(n), &w_uvq_ceil(), gq)?,
            )]
        }
        C::Eq4 => {
            let n = n()?;
            vec![cmp(
                "closed form vs A_n",
                b(cf(F::AlhUvq, Params::n(n)), gq)?,
                gf_oracle(&Family::anti_lecture_hall(n), &w_uvq_floor(), gq)?,
            )]
        }
        C::Eq5 => {
            let n = n()?;
            vec![cmp(
                "closed form vs A_n",
                b(cf(F::AlhUvq, Params::n(n)).with_args(ones()), gq)?,
                gf_oracle(&Family::anti_lecture_hall(n), &w_q(), gq)?,
            )]
        }
        C::Eq6 => {
            let (n, k) = (n()?, k()?);
            vec![cmp("closed form vs L_{n,k}", b(cf(F::TlhUvq, Params::nk(n, k)), gq)?, gf_oracle(&lh(n, k), &w_uvq_ceil(), gq)?)]
        }
        C::Eq7 => {
            let (n, k) = (n()?, k()?);
            vec![cmp(
                "closed form vs A_{n,k}",
                b(cf(F::TalhUvq, Params::nk(n, k)), gq)?,
                gf_oracle(&alh(n, k, None), &w_uvq_floor(), gq)?,
            )]
        }
        C::Eq8 => {
            let (n, k) = (n()?, k()?);
            vec![cmp("closed form vs L_{n,k}", b(cf(F::TlhXy, Params::nk(n, k)), gxy)?, gf_oracle(&lh(n, k), &w_xy(), gxy)?)]
        }
        C::Eq9 => {
            let (n, k) = (n()?, k()?);
            vec![cmp(
                "closed form vs A_{n,k}",
                b(cf(F::TalhXy, Params::nk(n, k)), gxy)?,
                gf_oracle(&alh(n, k, None), &w_xy(), gxy)?,
            )]
        }
        C::Eq10 => {
            let n = n()?;
            let (c, f) = c_f(n);
            let xy = mono(&[(Var::X, 1), (Var::Y, 1)]);
            let direct = Product::default()
                .gaussian(n as usize, f as usize, xy.clone())
                .over_poch(x(), xy.clone(), Length::Finite(c as usize))
                .over_poch(mono(&[(Var::X, 1), (Var::Y, 2)]), xy, Length::Finite(f as usize))
                .eval(gxy)?;
            let oracle = gf_oracle(&Family::anti_lecture_hall(n), &w_xy(), gxy)?;
            vec![
                cmp("n = k form vs A_n", direct, oracle.clone()),
                cmp("closed form vs A_n", b(cf(F::TalhXy, Params::nk(n, n)), gxy)?, oracle),
            ]
        }
        C::RtlhBar => {
            let (n, k) = (n()?, k()?);
            vec![cmp(
                "closed form vs Lbar_{n,k}",
                b(cf(F::TlhUvqBar, Params::nk(n, k)), gq)?,
                gf_oracle(&lbar(n, k, None), &w_uvq_ceil(), gq)?,
            )]
        }
        C::OetlhBar => {
            let (n, k) = (n()?, k()?);
            vec![cmp(
                "closed form vs Lbar_{n,k}",
                b(cf(F::TlhXyBar, Params::nk(n, k)), gxy)?,
                gf_oracle(&lbar(n, k, None), &w_xy(), gxy)?,
            )]
        }
        C::Combi => {
            let (n, k) = (n()?, k()?);
            let l = gf_oracle(&lh(n, k), &w_q(), gq)?;
            let r = gf_oracle(&Family::RestrictedOdd { n, k }, &w_q(), gq)?;
            vec![
                cmp("L_{n,k} vs R_{n,k}", l.clone(), r.clone()),
                cmp("R_{n,k} vs its closed form", r, b(cf(F::RNk, Params::nk(n, k)), gq)?),
                cmp("L_{n,k} vs refined closed form", l, b(cf(F::TlhUvq, Params::nk(n, k)).with_args(ones()), gq)?),
            ]
        }
        C::Diff => {
            let (n, k) = (n()?, k()?);
            vec![cmp("closed form vs Lbar_{n,k}", b(cf(F::LbarNkQ, Params::nk(n, k)), gq)?, gf_oracle(&lbar(n, k, None), &w_q(), gq)?)]
        }
        C::Lu1 | C::Ans => {
            let n = n()?;
            let mu = padded(p.need_mu(id)?, n)?;
            let (form, fam, ceil) = if id == C::Lu1 {
                (F::LMu, Family::lecture_hall(n), true)
            } else {
                (F::AMu, Family::anti_lecture_hall(n), false)
            };
            vec![cmp(
                "closed form vs members with this image",
                b(cf(form, Params::n(n).with_mu(mu.clone())), gq)?,
                oracle_image(fam, &mu, &w_q(), gq, ceil)?,
            )]
        }
        C::Ident1 => {
            let (n, k) = (n()?, k()?);
            vec![cmp(
                "truncated sum vs restricted odd form",
                b(cf(F::TlhUvq, Params::nk(n, k)).with_args(ones()), gq)?,
                b(cf(F::RNk, Params::nk(n, k)), gq)?,
            )]
        }
        C::Ident2 => {
            let (n, k) = (n()?, k()?);
            vec![cmp(
                "single term vs difference form",
                b(cf(F::TlhUvqBar, Params::nk(n, k)).with_args(ones()), gq)?,
                b(cf(F::LbarNkQ, Params::nk(n, k)), gq)?,
            )]
        }
        C::Ident2Lim => {
            let k = k()?;
            let (c, f) = c_f(k);
            let fin = |m: u32| Length::Finite(m as usize);
            let tri = Var::Q.pow(binom2(k));
            let left = Product::new(tri.clone()).over_poch(q(), q(), fin(k)).eval(gq)?;
            let right = Product::new(tri)
                .over_poch(q(), Var::Q.pow(2), fin(c))
                .over_poch(Var::Q.pow(2), Var::Q.pow(2), fin(f))
                .eval(gq)?;
            let big = d as u32 + k;
            vec![
                cmp("limit identity", left.clone(), right),
                cmp("limit vs large-n single term", left.clone(), b(cf(F::TlhUvqBar, Params::nk(big, k)).with_args(ones()), gq)?),
                cmp("limit vs D_k", left, gf_oracle(&Family::Distinct { k, at_most: false }, &w_q(), gq)?),
            ]
        }
        C::Fin3 => {
            let k = k()?;
            require(k >= 1, id, "k >= 1")?;
            let fam = |m| Family::Distinct { k: m, at_most: false };
            let left = gf_oracle(&fam(2 * k - 1), &w_zq(), gq)?.add(&gf_oracle(&fam(2 * k), &w_zq(), gq)?)?;
            let form = cf(F::Fin3Rhs, Params::k(k));
            let right = b(form.clone(), gq)?;
            let durfee = gf_oracle(
                &Family::OddDurfee { k },
                &[(Statistic::Weight, q()), (Statistic::PositiveParts, Var::Z.into())],
                gq,
            )?;
            let big = d as u32 + 2 * k;
            let finite = b(cf(F::TlhXyBar, Params::nk(big, 2 * k - 1)).with_args(zq_subst()), gq)?
                .add(&b(cf(F::TlhXyBar, Params::nk(big, 2 * k)).with_args(zq_subst()), gq)?)?;
            let other = BuildOptions {
                fin3_length: match opts.fin3_length {
                    Fin3Length::K => Fin3Length::Unbounded,
                    Fin3Length::Unbounded => Fin3Length::K,
                },
                ..*opts
            };
            let alt = build_with(&form, gq, &other)?;
            let name = |l: Fin3Length| match l {
                Fin3Length::K => "length k",
                Fin3Length::Unbounded => "unbounded length",
            };
            note = Some(match left.first_difference(&alt)? {
                None => format!("{} reading also agrees", name(other.fin3_length)),
                Some((e, l, r)) => format!(
                    "{} reading disagrees at [{}]: {} vs {}",
                    name(other.fin3_length),
                    crate::qseries::render_exps(&e),
                    l,
                    r
                ),
            });
            vec![
                cmp("D_{2k-1} + D_{2k} vs closed form", left.clone(), right),
                cmp("D_{2k-1} + D_{2k} vs odd partitions by Durfee rectangle", left.clone(), durfee),
                cmp("D_{2k-1} + D_{2k} vs large-n truncated form", left, finite),
            ]
        }
        C::Ref1 => {
            let k = k()?;
            let big = d as u32 + k;
            let left = gf_oracle(&Family::Distinct { k, at_most: true }, &w_q(), gq)?;
            vec![
                cmp("at most k distinct vs restricted odd", left.clone(), gf_oracle(&Family::RestrictedOdd { n: big, k }, &w_q(), gq)?),
                cmp("at most k distinct vs closed form", left, b(cf(F::RNk, Params::nk(big, k)), gq)?),
            ]
        }
        C::Ref2 => {
            let k = k()?;
            let (c, f) = c_f(k);
            let s = Var::Q.pow((c - f) as i32);
            let left = gf_oracle(&Family::Distinct { k, at_most: false }, &w_q(), gq)?;
            let rt = Family::RestrictedOddExact { n: None, t: f, j: c, l: None };
            let form = ClosedForm::new(F::RExactT, Params { t: Some(f), j: Some(c), ..Params::default() });
            vec![
                cmp("exactly k distinct vs shifted restricted odd", left.clone(), gf_oracle(&rt, &w_q(), gq)?.scale_monomial(&s)?),
                cmp("exactly k distinct vs shifted closed form", left, b(form, gq)?.scale_monomial(&s)?),
            ]
        }
        C::Ref2Plus => {
            let (n, k) = (n()?, k()?);
            require(k >= 1 && n >= k, id, "n >= k >= 1")?;
            let (c, f) = c_f(k);
            let s = Var::Q.pow((c - f) as i32);
            let left = gf_oracle(&lbar(n, k, None), &w_q(), gq)?;
            let plus = gf_oracle(&Family::RestrictedOddPlus { n, k }, &w_q(), gq)?;
            let mut out = vec![cmp("Lbar_{n,k} vs shifted restricted odd", left.clone(), plus.scale_monomial(&s)?)];
            if f >= 1 {
                let rt = ClosedForm::new(
                    F::RExactT,
                    Params {
                        n: Some(n),
                        t: Some(f),
                        j: Some(c),
                        l: Some(n - f + 1),
                        ..Params::default()
                    },
                );
                let shifted = b(rt, gq)?
                    .scale_monomial(&s)?
                    .div_one_minus(&Var::Q.pow((2 * n - 2 * f + 1) as i32))?;
                out.push(cmp("Lbar_{n,k} vs restricted-set closed form", left, shifted));
            }
            out
        }
        C::Transpose => {
            let k = k()?;
            let big = d as u32 + k;
            let left = gf_oracle(&Family::Plain { n: k, positive: None }, &w_zq(), gq)?;
            let odd = vec![(Statistic::Weight, q()), (Statistic::OddPartCount, Var::Z.into())];
            vec![
                cmp("P_k vs large-n closed form", left.clone(), b(cf(F::TalhXy, Params::nk(big, k)).with_args(zq_subst()), gq)?),
                cmp("P_k vs largest part at most k", left, gf_oracle(&Family::MaxPart { k }, &odd, gq)?),
            ]
        }
        C::Aident => {
            let (n, k) = (n()?, k()?);
            let xyq = Subst::identity().with(Var::X, q()).with(Var::Y, q());
            vec![cmp(
                "refined vs odd/even at x = y = q",
                b(cf(F::TalhUvq, Params::nk(n, k)).with_args(ones()), gq)?,
                b(cf(F::TalhXy, Params::nk(n, k)).with_args(xyq), gq)?,
            )]
        }
        C::Concl1 => {
            let n = n()?;
            vec![cmp("sum of bar forms vs product", b(cf(F::TlhXy, Params::nk(n, n)), gxy)?, b(cf(F::LhpXy, Params::n(n)), gxy)?)]
        }
        C::Concl2 => {
            let n = n()?;
            let g = Grading::new(&[(Var::A, 1), (Var::Q, 1)], d);
            let a: Monomial = Var::A.into();
            let args = Subst::identity().with(Var::X, a.clone()).with(Var::Y, mono(&[(Var::Q, 1), (Var::A, -1)]));
            let right = Product::default().over_poch(a, q(), Length::Finite(n as usize)).eval(g)?;
            vec![cmp("specialized sum vs 1/(a;q)_n", b(cf(F::TlhXy, Params::nk(n, n)).with_args(args), g)?, right)]
        }
        C::Lu3 | C::Prop2 => {
            let n = n()?;
            let (form, lhs_id) = if id == C::Lu3 { (F::LhpUvq, F::LhpUvq) } else { (F::AlhUvq, F::AlhUvq) };
            let mut rhs = Vec::new();
            for m in 0..=n {
                let pre = Product::new(mono(&[(Var::U, m as i32), (Var::V, m as i32), (Var::Q, binom2(m))]))
                    .gaussian(n as usize, m as usize, q());
                let mut args = Subst::identity().with(Var::V, Var::V.pow(-1));
                if id == C::Lu3 {
                    args.set(Var::U, mono(&[(Var::U, 1), (Var::Q, (n - m) as i32)]));
                }
                rhs.extend(times(&pre, &cf(form, Params::n(m)).with_args(args), opts)?);
            }
            vec![cmp("closed form vs recurrence", b(cf(lhs_id, Params::n(n)), gq)?, eval_sum(&rhs, gq)?)]
        }
        C::Lnrec => {
            let n = n()?;
            require(n >= 1, id, "n >= 1")?;
            let pre = Product::default().over_one_minus(x());
            let rhs = times(&pre, &cf(F::LhpXy, Params::n(n - 1)).with_args(bme_subst()), opts)?;
            let oracle = gf_oracle(&Family::lecture_hall(n - 1), &w_xy_sub(), gxy)?.div_one_minus(&x())?;
            let lhs = b(cf(F::LhpXy, Params::n(n)), gxy)?;
            vec![
                cmp("closed forms", lhs.clone(), eval_sum(&rhs, gxy)?),
                cmp("closed form vs enumerated right side", lhs, oracle),
            ]
        }
        C::Map1 => {
            let (n, k) = (n()?, k()?);
            require(n > 2 * k, id, "n >= 2k+1")?;
            let pre = Product::new(x()).over_one_minus(x());
            let rhs = times(&pre, &cf(F::TlhXyBar, Params::nk(n - 1, 2 * k)).with_args(bme_subst()), opts)?;
            let left = gf_oracle(&lbar(n, 2 * k + 1, None), &w_xy(), gxy)?;
            let right = gf_oracle(&lbar(n - 1, 2 * k, None), &w_xy_sub(), gxy)?
                .scale_monomial(&x())?
                .div_one_minus(&x())?;
            vec![
                cmp("closed forms", b(cf(F::TlhXyBar, Params::nk(n, 2 * k + 1)), gxy)?, eval_sum(&rhs, gxy)?),
                cmp("enumerations", left, right),
            ]
        }
        C::Map2 => {
            let (n, k) = (n()?, k()?);
            require(n >= 2 * k, id, "n >= 2k")?;
            let pre = Product::default().over_one_minus(x());
            let rhs = times(&pre, &cf(F::TalhXy, Params::nk(n, 2 * k)).with_args(bme_subst()), opts)?;
            let left = gf_oracle(&alh(n, 2 * k + 1, None), &w_xy(), gxy)?;
            let right = gf_oracle(&alh(n, 2 * k, None), &w_xy_sub(), gxy)?.div_one_minus(&x())?;
            vec![
                cmp("closed forms", b(cf(F::TalhXy, Params::nk(n, 2 * k + 1)), gxy)?, eval_sum(&rhs, gxy)?),
                cmp("enumerations", left, right),
            ]
        }
        C::Bmeb => {
            let (n, k, i) = (n()?, k()?, i()?);
            require(k >= 1 && n >= 2 * k && i >= 1, id, "n >= 2k, k >= 1, i >= 1")?;
            let span = n - 2 * k + 1;
            let left = gf_oracle(&lbar(n, 2 * k, Some(i)), &w_xy(), gxy)?;
            let inner = gf_oracle(&lbar(n - 1, 2 * k - 1, Some(i)), &w_xy_sub(), raised(gxy, i64::from(i)))?;
            // x^{l-i} with l = ceil(i/span), i.e. x^{-floor((span-1) i / span)}
            let side = |l: u32| -> Result<GradedSeries> {
                shift(&inner, &Var::X.pow(l as i32 - i as i32), gxy)?.div_one_minus(&x())
            };
            let floor_reading = side(i / span)?;
            note = Some(match left.first_difference(&floor_reading)? {
                None => String::from("l = floor(i/(n-2k+1)) also agrees"),
                Some((e, a, b)) => format!(
                    "l = floor(i/(n-2k+1)) disagrees at [{}]: {} vs {}",
                    crate::qseries::render_exps(&e),
                    a,
                    b
                ),
            });
            vec![cmp("fixed last part", left, side(i.div_ceil(span))?)]
        }
        C::Bmeb1 => {
            let (n, k, i) = (n()?, k()?, i()?);
            require(k >= 1 && n >= 2 * k, id, "n >= 2k, k >= 1")?;
            let l = i / n;
            let left = gf_oracle(&alh(n, 2 * k, Some(i)), &w_xy(), gxy)?;
            let deficit = i64::from(i) + i64::from(l);
            let inner = gf_oracle(&alh(n, 2 * k - 1, Some(i)), &w_xy_sub(), raised(gxy, deficit))?;
            let right = shift(&inner, &Var::X.pow(-(i as i32) - l as i32), gxy)?.div_one_minus(&x())?;
            vec![cmp("fixed last part", left, right)]
        }
        C::Irecurr => {
            let (n, k, i) = (n()?, k()?, i()?);
            require(k >= 1 && n > 2 * k && i >= 1, id, "n >= 2k+1, k >= 1, i >= 1")?;
            let span = n - 2 * k;
            let (l, r) = ((i - 1) / span, (i - 1) % span + 1);
            let xi = Var::X.pow(i as i32);
            let left = gf_oracle(&lbar(n, 2 * k + 1, Some(i)), &w_xy(), gxy)?;
            let mut right = gf_oracle(&lbar(n, 2 * k + 1, Some(i - 1)), &w_xy(), gxy)?.scale_monomial(&x())?;
            right = right.sub(&gf_oracle(&lbar(n, 2 * k, Some(i + l)), &w_xy(), gxy)?.scale_monomial(&xi)?)?;
            if r == 1 && i != 1 {
                right = right.sub(&gf_oracle(&lbar(n, 2 * k, Some(i + l - 1)), &w_xy(), gxy)?.scale_monomial(&xi)?)?;
            }
            vec![cmp("add one to the last part", left, right)]
        }
        C::L2krecurr => {
            let (n, k) = (n()?, k()?);
            require(k >= 1 && n >= 2 * k, id, "n >= 2k, k >= 1")?;
            let mut rhs = times(
                &Product::default().over_one_minus(x()),
                &cf(F::TlhXyBar, Params::nk(n - 1, 2 * k - 1)).with_args(bme_subst()),
                opts,
            )?;
            let mut right = gf_oracle(&lbar(n - 1, 2 * k - 1, None), &w_xy_sub(), gxy)?.div_one_minus(&x())?;
            if n > 2 * k {
                rhs.extend(cf(F::TlhXyBar, Params::nk(n - 1, 2 * k)).with_args(bme_subst()).products(opts)?);
                right = right.add(&gf_oracle(&lbar(n - 1, 2 * k, None), &w_xy_sub(), gxy)?)?;
            }
            vec![
                cmp("closed forms", b(cf(F::TlhXyBar, Params::nk(n, 2 * k)), gxy)?, eval_sum(&rhs, gxy)?),
                cmp("enumerations", gf_oracle(&lbar(n, 2 * k, None), &w_xy(), gxy)?, right),
            ]
        }
        C::A2krecurr => {
            let (n, k) = (n()?, k()?);
            require(k >= 1 && n + 1 >= 2 * k, id, "n >= 2k-1, k >= 1")?;
            let lhs = b(cf(F::TalhXy, Params::nk(n, 2 * k)), gxy)?;
            if n + 1 == 2 * k {
                let swap = Subst::identity().with(Var::X, Var::Y.into()).with(Var::Y, x());
                let rhs = times(&Product::default().over_one_minus(x()), &cf(F::TalhXy, Params::nk(n, n)).with_args(swap), opts)?;
                vec![cmp("closed forms", lhs, eval_sum(&rhs, gxy)?)]
            } else {
                let args = Subst::identity()
                    .with(Var::X, Var::Y.pow(-1))
                    .with(Var::Y, mono(&[(Var::X, 1), (Var::Y, 2)]));
                let first = cf(F::TalhXy, Params::nk(n - 1, 2 * k)).with_args(args).products(opts)?;
                let second = cf(F::TalhXy, Params::nk(n - 1, 2 * k - 1));
                let y: Monomial = Var::Y.into();
                let mut rhs = first.clone();
                rhs.extend(times(&Product::default().over_one_minus(y.clone()), &second, opts)?);
                let mut literal = first;
                literal.extend(times(&Product::new(y.clone()).over_one_minus(y), &second, opts)?);
                let literal = eval_sum(&literal, gxy)?;
                note = Some(match lhs.first_difference(&literal)? {
                    None => String::from("y/(1-y) coefficient also agrees"),
                    Some((e, l, r)) => {
                        format!("y/(1-y) coefficient disagrees at [{}]: {} vs {}", crate::qseries::render_exps(&e), l, r)
                    }
                });
                vec![cmp("closed forms with 1/(1-y)", lhs, eval_sum(&rhs, gxy)?)]
            }
        }
        C::Oddeq => {
            let (n, k) = (n()?, k()?);
            require(k >= 1 && n >= 2 * k, id, "n >= 2k, k >= 1")?;
            let lhs = Product::default().one_minus(x());
            let lhs = times(&lhs, &cf(F::TalhXy, Params::nk(n, 2 * k + 1)), opts)?;
            let mut rhs = cf(F::TalhXy, Params::nk(n - 1, 2 * k)).products(opts)?;
            let pre = Product::new(x().neg()).over_one_minus(x());
            rhs.extend(times(&pre, &cf(F::TalhXy, Params::nk(n - 1, 2 * k - 1)).with_args(bme_subst()), opts)?);
            let left = gf_oracle(&alh(n, 2 * k + 1, None), &w_xy(), gxy)?.mul_one_minus(&x())?;
            let sub = gf_oracle(&alh(n - 1, 2 * k - 1, None), &w_xy_sub(), gxy)?
                .scale_monomial(&x())?
                .div_one_minus(&x())?;
            let right = gf_oracle(&alh(n - 1, 2 * k, None), &w_xy(), gxy)?.sub(&sub)?;
            vec![
                cmp("closed forms", eval_sum(&lhs, gxy)?, eval_sum(&rhs, gxy)?),
                cmp("enumerations", left, right),
            ]
        }
        C::Need | C::Lu2 | C::Au3 | C::Au2 => {
            let n = n()?;
            let mu = padded(p.need_mu(id)?, n)?;
            let (m, wt, ot, tilde) = reduce(&mu);
            let lecture = matches!(id, C::Need | C::Lu2);
            let refined = matches!(id, C::Need | C::Au3);
            let form = if lecture { F::LMu } else { F::AMu };
            let w: u32 = mu.iter().sum();
            let mut lpre = Product::default();
            let mut rexp = vec![(Var::Q, binom2(m) + if lecture { (n - m) as i32 * wt } else { 0 })];
            if refined {
                lpre = lpre.times(&mono(&[(Var::U, w as i32), (Var::V, odd_count(&mu))]));
                rexp.extend([(Var::U, m as i32 + wt), (Var::V, m as i32 - ot)]);
            }
            let rpre = Product::new(mono(&rexp)).gaussian(n as usize, m as usize, q());
            let lhs = times(&lpre, &cf(form, Params::n(n).with_mu(mu)), opts)?;
            let rhs = times(&rpre, &cf(form, Params::n(m).with_mu(tilde)), opts)?;
            vec![cmp("remove the first column", eval_sum(&lhs, gq)?, eval_sum(&rhs, gq)?)]
        }
        C::Aun => {
            let (n, k) = (n()?, k()?);
            require(n >= k, id, "n >= k")?;
            let mu = padded(p.need_mu(id)?, k)?;
            let w: u32 = mu.iter().sum();
            let pre = Product::new(Var::Q.pow(((n - k) * w) as i32)).gaussian(n as usize, k as usize, q());
            let factored = times(&pre, &cf(F::AMu, Params::n(k).with_mu(mu.clone())), opts)?;
            let direct = b(cf(F::AMuK, Params::nk(n, k).with_mu(mu.clone())), gq)?;
            vec![
                cmp("closed form vs members with this image", direct.clone(), oracle_image(alh(n, k, None), &mu, &w_q(), gq, false)?),
                cmp("closed form vs factored form", direct, eval_sum(&factored, gq)?),
            ]
        }
        C::QChuI => qchu(spec, QChuVariant::I, opts)?,
        C::QChuII => qchu(spec, QChuVariant::II, opts)?,
        C::Bme | C::BmeNk | C::ThetaNk => {
            let map = match id {
                C::Bme => MapId::Bme,
                C::BmeNk => MapId::BmeNk,
                _ => MapId::ThetaNk,
            };
            let k = if id == C::Bme { None } else { Some(k()?) };
            return verify_bijection(map, n()?, k, d);
        }
    };
    verdict(spec, comparisons, note)
}
