use alloc::format;

use super::stats::defined_for;
use super::{statistics, Family, Statistic};
use crate::qseries::{GradedSeries, Grading, Monomial};
use crate::{Error, Result};

/// Maps statistics to the monomials they exponentiate: each member
/// contributes `prod_s m_s^{s(lambda)}`.
pub type Assignment = [(Statistic, Monomial)];

/// Largest weight `|lambda|` a member can have while its monomial stays
/// within the bound.
///
/// Only `Weight`, `OddIndexSum` and `EvenIndexSum` may carry positive grade
/// for this estimate; every other assigned statistic must have grade zero or
/// more, so it can only push a member further out. With `G_o` and `G_e` the
/// grades contributed per unit of `|lambda_o|` and `|lambda_e|`, the family
/// bound `|lambda_e| <= rho * |lambda_o|` gives
/// `grade >= alpha * |lambda|` where `alpha = (G_o + rho G_e)/(1 + rho)` when
/// `G_o >= G_e` and `alpha = G_o` otherwise.
pub fn max_weight_for(family: &Family, assignment: &Assignment, grading: &Grading) -> Result<u64> {
    let unbounded = || Error::UnboundedEnumeration {
        family: format!("{}", family),
    };
    if !grading.is_bounded() {
        return Err(unbounded());
    }
    let (mut gw, mut go, mut ge) = (0i64, 0i64, 0i64);
    for (s, m) in assignment {
        let g = m.grade(grading);
        match s {
            Statistic::Weight => gw += g,
            Statistic::OddIndexSum => go += g,
            Statistic::EvenIndexSum => ge += g,
            _ if g < 0 => return Err(unbounded()),
            _ => {}
        }
    }
    let (go, ge) = (gw + go, gw + ge);
    // alpha = num / den
    let (num, den) = if go < ge {
        (go, 1)
    } else {
        match odd_even_ratio(family) {
            Some(rho) => (go + rho * ge, 1 + rho),
            None => (ge, 1),
        }
    };
    if num <= 0 {
        return Err(unbounded());
    }
    Ok((grading.max_grade() * den / num) as u64)
}

/// A constant `rho` with `|lambda_e| <= rho * |lambda_o|` on the family, or
/// `None` if there is none.
fn odd_even_ratio(family: &Family) -> Option<i64> {
    match *family {
        // lambda_{i+1} <= lambda_i (d+1)/d <= 2 lambda_i once every d >= 1
        Family::AntiLectureHall { n, k, .. } => (n + 1 > k).then_some(2),
        // nonincreasing sequences
        _ => Some(1),
    }
}

/// Generating function of `family` under `assignment`, exact through the
/// grading bound.
pub fn gf_oracle(family: &Family, assignment: &Assignment, grading: Grading) -> Result<GradedSeries> {
    gf_oracle_filtered(family, assignment, grading, |_| true)
}

/// As [`gf_oracle`], summing only the members accepted by `keep`.
pub fn gf_oracle_filtered(
    family: &Family,
    assignment: &Assignment,
    grading: Grading,
    keep: impl Fn(&[u32]) -> bool,
) -> Result<GradedSeries> {
    for (s, _) in assignment {
        if !defined_for(*s, family) {
            return Err(Error::UndefinedStatistic {
                statistic: s.name(),
                family: format!("{}", family),
            });
        }
    }
    let w = max_weight_for(family, assignment, &grading)?;
    let mut out = GradedSeries::zero(grading);
    for seq in family.enumerate(w)? {
        if !keep(&seq.parts) {
            continue;
        }
        let st = statistics(&seq);
        let mut m = Monomial::one();
        for (s, base) in assignment {
            let e = st.get(*s, family)?;
            m = &m * &base.pow(e as i64)?;
        }
        out.add_monomial(m)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::Var;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn examples() {
        let q = vec![(Statistic::Weight, Var::Q.pow(1))];
        let s = gf_oracle(&Family::lecture_hall(2), &q, Grading::q(4)).unwrap();
        assert_eq!(s.to_string(), "1 + q + q^2 + 2*q^3 + 2*q^4");
        let s = gf_oracle(&Family::anti_lecture_hall(2), &q, Grading::q(2)).unwrap();
        assert_eq!(s.to_string(), "1 + q + 2*q^2");
        let xy = vec![
            (Statistic::OddIndexSum, Var::X.pow(1)),
            (Statistic::EvenIndexSum, Var::Y.pow(1)),
        ];
        let s = gf_oracle(&Family::LectureHall { n: 2, k: 1 }, &xy, Grading::xy(3)).unwrap();
        assert_eq!(s.to_string(), "1 + x + x^2 + x^3");
    }

    #[test]
    fn rejects_undefined_and_unbounded() {
        let u = vec![(Statistic::CeilWeight, Var::U.pow(1))];
        assert!(gf_oracle(&Family::anti_lecture_hall(2), &u, Grading::q(3)).is_err());
        // x alone cannot bound compositions whose first ramp divisor is zero
        let x = vec![(Statistic::OddIndexSum, Var::X.pow(1))];
        let f = Family::AntiLectureHall { n: 1, k: 2, last: None };
        assert!(gf_oracle(&f, &x, Grading::xy(3)).is_err());
        assert_eq!(max_weight_for(&Family::lecture_hall(3), &x, &Grading::xy(3)).unwrap(), 6);
    }
}
