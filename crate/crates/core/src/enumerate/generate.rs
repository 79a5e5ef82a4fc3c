use alloc::vec::Vec;

use super::{render_parts, Family, PartSequence};
use crate::{Error, Result};

/// The plain partition families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlainKind {
    /// `P_n`: `n` nonnegative parts.
    KNonnegParts(u32),
    /// `P_{n,m}`: `n` parts, exactly `m` positive.
    MPositiveOfN { n: u32, m: u32 },
    /// Positive parts, each at most `k`.
    MaxPartK(u32),
    /// `D_k`: exactly `k` distinct positive parts.
    DistinctKParts(u32),
}

/// Fixed-length recursive descent. `hi(pos, prefix)` is the largest value
/// allowed at `pos` (`None` for no constraint beyond the weight budget) and
/// `lo(pos, prefix)` the smallest.
fn descend(
    len: usize,
    budget: u64,
    hi: &dyn Fn(usize, &[u32]) -> Option<u64>,
    lo: &dyn Fn(usize, &[u32]) -> u64,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let pos = cur.len();
    if pos == len {
        out.push(cur.clone());
        return;
    }
    let top = hi(pos, cur).map_or(budget, |h| h.min(budget));
    let bottom = lo(pos, cur);
    if bottom > top {
        return;
    }
    for v in bottom..=top {
        cur.push(v as u32);
        descend(len, budget - v, hi, lo, cur, out);
        cur.pop();
    }
}

/// All partitions (largest part first) into parts from `allowed`, which must
/// be sorted in decreasing order, with weight at most `budget`.
fn partitions_from(allowed: &[u32], budget: u64) -> Vec<Vec<u32>> {
    fn go(allowed: &[u32], idx: usize, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == allowed.len() {
            out.push(cur.clone());
            return;
        }
        let p = u64::from(allowed[idx]);
        let mut used = 0;
        loop {
            go(allowed, idx + 1, budget - used * p, cur, out);
            if (used + 1) * p > budget {
                break;
            }
            used += 1;
            cur.push(allowed[idx]);
        }
        for _ in 0..used {
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(allowed, 0, budget, &mut Vec::new(), &mut out);
    out
}

/// Odd numbers `<= max` in decreasing order.
fn odd_upto(max: u64) -> Vec<u32> {
    let mut v: Vec<u32> = (1..=max).filter(|p| p % 2 == 1).map(|p| p as u32).collect();
    v.reverse();
    v
}

fn weight(p: &[u32]) -> u64 {
    p.iter().map(|&x| u64::from(x)).sum()
}

/// Weight ascending, then parts in decreasing lexicographic order.
fn finish(mut v: Vec<Vec<u32>>, family: Family) -> Vec<PartSequence> {
    v.sort_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| b.cmp(a)));
    v.into_iter().map(|p| PartSequence::new(p, family)).collect()
}

fn count_in(parts: &[u32], lo: u64, hi: Option<u64>) -> usize {
    parts
        .iter()
        .filter(|&&p| u64::from(p) >= lo && hi.is_none_or(|h| u64::from(p) <= h))
        .count()
}

fn lecture_hall_raw(n: u32, k: u32, budget: u64, positive: bool) -> Vec<Vec<u32>> {
    let (n, len) = (u64::from(n), k as usize);
    let hi = move |pos: usize, prefix: &[u32]| {
        if pos == 0 {
            None
        } else {
            // lambda_{pos} / (n-pos+1) >= lambda_{pos+1} / (n-pos), 1-based
            let d = n - pos as u64;
            Some(u64::from(prefix[pos - 1]) * d / (d + 1))
        }
    };
    let lo = move |_: usize, _: &[u32]| u64::from(positive);
    let mut out = Vec::new();
    descend(len, budget, &hi, &lo, &mut Vec::new(), &mut out);
    out
}

/// Members of `L(n,k)`, or of `Lbar(n,k)` when `exactly_k_positive`, with
/// weight at most `max_weight`. Sequences have length `k`.
pub fn gen_lecture_hall(n: u32, k: u32, max_weight: u64, exactly_k_positive: bool) -> Result<Vec<PartSequence>> {
    let family = if exactly_k_positive {
        Family::LectureHallBar { n, k, last: None }
    } else {
        Family::LectureHall { n, k }
    };
    family.validate()?;
    Ok(finish(lecture_hall_raw(n, k, max_weight, exactly_k_positive), family))
}

fn anti_raw(n: u32, k: u32, budget: u64) -> Vec<Vec<u32>> {
    let len = k as usize;
    let base = i64::from(n) - i64::from(k);
    let hi = move |pos: usize, prefix: &[u32]| {
        if pos == 0 {
            return None;
        }
        // (d+1) lambda_i >= d lambda_{i+1} with d = n-k+i, 1-based i = pos
        let d = base + pos as i64;
        if d == 0 {
            None
        } else {
            let d = d as u64;
            Some(u64::from(prefix[pos - 1]) * (d + 1) / d)
        }
    };
    let lo = |_: usize, _: &[u32]| 0u64;
    let mut out = Vec::new();
    descend(len, budget, &hi, &lo, &mut Vec::new(), &mut out);
    out
}

/// Members of `A(n,k)` with weight at most `max_weight`, restricted to last
/// part `i` when given. Sequences have length `k`.
pub fn gen_anti_lecture_hall(n: u32, k: u32, max_weight: u64, last_part: Option<u32>) -> Result<Vec<PartSequence>> {
    let family = Family::AntiLectureHall { n, k, last: last_part };
    family.validate()?;
    let mut raw = anti_raw(n, k, max_weight);
    if let Some(i) = last_part {
        raw.retain(|p| p.last().copied() == Some(i));
    }
    Ok(finish(raw, family))
}

/// Members of `R(n,k)` with weight at most `max_weight`.
pub fn gen_restricted_odd(n: u32, k: u32, max_weight: u64) -> Result<Vec<PartSequence>> {
    let family = Family::RestrictedOdd { n, k };
    family.validate()?;
    let mut raw = partitions_from(&odd_upto(2 * u64::from(n)), max_weight);
    raw.retain(|p| restricted_odd_ok(n, k, p));
    Ok(finish(raw, family))
}

fn restricted_odd_ok(n: u32, k: u32, p: &[u32]) -> bool {
    let (c, f) = (u64::from(k.div_ceil(2)), u64::from(k / 2));
    let n = u64::from(n);
    count_in(p, 2 * c + 1, Some((2 * (n - f)).saturating_sub(1))) as u64 <= f
}

/// Members of `Rt(n,t,j,l)` with weight at most `max_weight`; `None` for `n`
/// or `l` removes that upper limit.
pub fn gen_restricted_odd_exact_t(
    n: Option<u32>,
    t: u32,
    j: u32,
    l: Option<u32>,
    max_weight: u64,
) -> Result<Vec<PartSequence>> {
    let family = Family::RestrictedOddExact { n, t, j, l };
    family.validate()?;
    let top = n.map_or(max_weight, |n| (2 * u64::from(n)).saturating_sub(1));
    let mut raw = partitions_from(&odd_upto(top), max_weight);
    raw.retain(|p| exact_t_ok(t, j, l, p));
    Ok(finish(raw, family))
}

fn exact_t_ok(t: u32, j: u32, l: Option<u32>, p: &[u32]) -> bool {
    let hi = l.map(|l| (2 * u64::from(l)).saturating_sub(1));
    count_in(p, 2 * u64::from(j) + 1, hi) == t as usize
}

fn restricted_plus_ok(n: u32, k: u32, p: &[u32]) -> bool {
    let (c, f, n) = (u64::from(k.div_ceil(2)), u64::from(k / 2), u64::from(n));
    let a = count_in(p, 2 * c + 1, Some((2 * n - 2 * f).saturating_sub(1))) as u64;
    let b = if f >= 1 {
        count_in(p, 2 * n - 2 * f + 1, Some(2 * n - 2 * f + 1)) as u64
    } else {
        0
    };
    a <= f && f <= a + b
}

/// Durfee rectangle size of a partition into odd parts: the largest `j`
/// with `lambda_j >= 2j-1`.
pub(crate) fn durfee_rectangle(p: &[u32]) -> u32 {
    p.iter()
        .enumerate()
        .take_while(|&(i, &x)| u64::from(x) + 1 >= 2 * (i as u64 + 1))
        .count() as u32
}

/// Plain partition families with weight at most `max_weight`.
pub fn gen_plain(kind: PlainKind, max_weight: u64) -> Result<Vec<PartSequence>> {
    let family = match kind {
        PlainKind::KNonnegParts(n) => Family::Plain { n, positive: None },
        PlainKind::MPositiveOfN { n, m } => Family::Plain { n, positive: Some(m) },
        PlainKind::MaxPartK(k) => Family::MaxPart { k },
        PlainKind::DistinctKParts(k) => Family::Distinct { k, at_most: false },
    };
    family.enumerate(max_weight)
}

fn plain_raw(n: u32, budget: u64) -> Vec<Vec<u32>> {
    let hi = |pos: usize, prefix: &[u32]| if pos == 0 { None } else { Some(u64::from(prefix[pos - 1])) };
    let lo = |_: usize, _: &[u32]| 0u64;
    let mut out = Vec::new();
    descend(n as usize, budget, &hi, &lo, &mut Vec::new(), &mut out);
    out
}

fn distinct_raw(k: u32, budget: u64) -> Vec<Vec<u32>> {
    let len = k as usize;
    let hi = |pos: usize, prefix: &[u32]| {
        if pos == 0 {
            None
        } else {
            Some(u64::from(prefix[pos - 1]).saturating_sub(1))
        }
    };
    let lo = move |pos: usize, _: &[u32]| (len - pos) as u64;
    let mut out = Vec::new();
    descend(len, budget, &hi, &lo, &mut Vec::new(), &mut out);
    out
}

impl Family {
    /// Every member with weight at most `max_weight`, each exactly once,
    /// sorted by weight and then by decreasing parts.
    pub fn enumerate(&self, max_weight: u64) -> Result<Vec<PartSequence>> {
        self.validate()?;
        let w = max_weight;
        let raw: Vec<Vec<u32>> = match *self {
            Family::LectureHall { n, k } => lecture_hall_raw(n, k, w, false),
            Family::LectureHallBar { n, k, last: None } => lecture_hall_raw(n, k, w, true),
            Family::LectureHallBar { n, k, last: Some(0) } => {
                let mut v = lecture_hall_raw(n, k - 1, w, true);
                for p in &mut v {
                    p.push(0);
                }
                v
            }
            Family::LectureHallBar { n, k, last: Some(i) } => {
                let mut v = lecture_hall_raw(n, k, w, true);
                v.retain(|p| p.last().copied() == Some(i));
                v
            }
            Family::AntiLectureHall { n, k, last } => {
                let mut v = anti_raw(n, k, w);
                if let Some(i) = last {
                    v.retain(|p| p.last().copied() == Some(i));
                }
                v
            }
            Family::RestrictedOdd { n, k } => {
                let mut v = partitions_from(&odd_upto(2 * u64::from(n)), w);
                v.retain(|p| restricted_odd_ok(n, k, p));
                v
            }
            Family::RestrictedOddExact { n, t, j, l } => {
                return gen_restricted_odd_exact_t(n, t, j, l, w);
            }
            Family::RestrictedOddPlus { n, k } => {
                let mut v = partitions_from(&odd_upto(2 * u64::from(n)), w);
                v.retain(|p| restricted_plus_ok(n, k, p));
                v
            }
            Family::Plain { n, positive } => {
                let mut v = plain_raw(n, w);
                if let Some(m) = positive {
                    v.retain(|p| p.iter().filter(|&&x| x > 0).count() == m as usize);
                }
                v
            }
            Family::Distinct { k, at_most: false } => distinct_raw(k, w),
            Family::Distinct { k, at_most: true } => (0..=k).flat_map(|j| distinct_raw(j, w)).collect(),
            Family::MaxPart { k } => {
                let allowed: Vec<u32> = (1..=k).rev().collect();
                partitions_from(&allowed, w)
            }
            Family::OddDurfee { k } => {
                let mut v = partitions_from(&odd_upto(w), w);
                v.retain(|p| durfee_rectangle(p) == k);
                v
            }
        };
        Ok(finish(raw, *self))
    }

    /// Membership test by the defining inequalities. On failure the error
    /// names the first violated inequality: for the ratio chains `i` means
    /// the comparison of positions `i` and `i+1`; `k` for the positivity or
    /// last-part condition; `0` for a length or global condition.
    pub fn check(&self, parts: &[u32]) -> Result<()> {
        self.validate()?;
        let fail = |index: usize| {
            Err(Error::NotInFamily {
                sequence: render_parts(parts),
                family: alloc::format!("{}", self),
                index,
            })
        };
        let nonincreasing = |p: &[u32]| p.windows(2).all(|w| w[0] >= w[1]);
        let positive = |p: &[u32]| p.iter().all(|&x| x > 0);
        let odd = |p: &[u32]| p.iter().all(|&x| x % 2 == 1);
        match *self {
            Family::LectureHall { n, k } | Family::LectureHallBar { n, k, .. } => {
                if parts.len() != k as usize {
                    return fail(0);
                }
                let n = u64::from(n);
                for i in 1..parts.len() {
                    let d = n - i as u64 + 1;
                    if (d - 1) * u64::from(parts[i - 1]) < d * u64::from(parts[i]) {
                        return fail(i);
                    }
                }
                if let Family::LectureHallBar { k, last, .. } = *self {
                    let k = k as usize;
                    match last {
                        Some(0) => {
                            if parts[k - 1] != 0 || (k >= 2 && parts[k - 2] == 0) {
                                return fail(k);
                            }
                        }
                        Some(i) => {
                            if parts[k - 1] != i {
                                return fail(k);
                            }
                        }
                        None => {
                            if k >= 1 && parts[k - 1] == 0 {
                                return fail(k);
                            }
                        }
                    }
                }
                Ok(())
            }
            Family::AntiLectureHall { n, k, last } => {
                if parts.len() != k as usize {
                    return fail(0);
                }
                let base = i64::from(n) - i64::from(k);
                for i in 1..parts.len() {
                    let d = (base + i as i64) as u64;
                    if (d + 1) * u64::from(parts[i - 1]) < d * u64::from(parts[i]) {
                        return fail(i);
                    }
                }
                if let Some(i) = last {
                    if parts.last().copied() != Some(i) {
                        return fail(k as usize);
                    }
                }
                Ok(())
            }
            Family::RestrictedOdd { n, k } => {
                let ok = positive(parts)
                    && nonincreasing(parts)
                    && odd(parts)
                    && parts.iter().all(|&p| p < 2 * n)
                    && restricted_odd_ok(n, k, parts);
                if ok { Ok(()) } else { fail(0) }
            }
            Family::RestrictedOddExact { n, t, j, l } => {
                let ok = positive(parts)
                    && nonincreasing(parts)
                    && odd(parts)
                    && n.is_none_or(|n| parts.iter().all(|&p| p < 2 * n))
                    && exact_t_ok(t, j, l, parts);
                if ok { Ok(()) } else { fail(0) }
            }
            Family::RestrictedOddPlus { n, k } => {
                let ok = positive(parts)
                    && nonincreasing(parts)
                    && odd(parts)
                    && parts.iter().all(|&p| p < 2 * n)
                    && restricted_plus_ok(n, k, parts);
                if ok { Ok(()) } else { fail(0) }
            }
            Family::Plain { n, positive: m } => {
                let ok = parts.len() == n as usize
                    && nonincreasing(parts)
                    && m.is_none_or(|m| parts.iter().filter(|&&x| x > 0).count() == m as usize);
                if ok { Ok(()) } else { fail(0) }
            }
            Family::Distinct { k, at_most } => {
                let len_ok = if at_most {
                    parts.len() <= k as usize
                } else {
                    parts.len() == k as usize
                };
                let ok = len_ok && positive(parts) && parts.windows(2).all(|w| w[0] > w[1]);
                if ok { Ok(()) } else { fail(0) }
            }
            Family::MaxPart { k } => {
                let ok = positive(parts) && nonincreasing(parts) && parts.iter().all(|&p| p <= k);
                if ok { Ok(()) } else { fail(0) }
            }
            Family::OddDurfee { k } => {
                let ok = positive(parts) && nonincreasing(parts) && odd(parts) && durfee_rectangle(parts) == k;
                if ok { Ok(()) } else { fail(0) }
            }
        }
    }
}

/// All length-`len` sequences with entries in `0..=max`, for exhaustive
/// membership tests.
#[cfg(test)]
pub(crate) fn all_sequences(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=max).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};


    fn show(v: &[PartSequence]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn lecture_hall_examples() {
        let v = gen_lecture_hall(2, 2, 3, false).unwrap();
        assert_eq!(show(&v), ["(0,0)", "(1,0)", "(2,0)", "(3,0)", "(2,1)"]);
        let v = gen_lecture_hall(2, 1, 2, false).unwrap();
        assert_eq!(show(&v), ["(0)", "(1)", "(2)"]);
        let v = gen_lecture_hall(3, 2, 3, true).unwrap();
        assert_eq!(show(&v), ["(2,1)"]);
        assert!(gen_lecture_hall(2, 3, 3, false).is_err());
    }

    #[test]
    fn anti_examples() {
        let v = gen_anti_lecture_hall(2, 2, 2, None).unwrap();
        assert_eq!(show(&v), ["(0,0)", "(1,0)", "(2,0)", "(1,1)"]);
        let v = gen_anti_lecture_hall(2, 2, 1, None).unwrap();
        assert_eq!(show(&v), ["(0,0)", "(1,0)"]);
        let v = gen_anti_lecture_hall(1, 2, 2, None).unwrap();
        assert_eq!(show(&v), ["(0,0)", "(1,0)", "(0,1)", "(2,0)", "(1,1)", "(0,2)"]);
        assert!(gen_anti_lecture_hall(1, 3, 2, None).is_err());
    }

    #[test]
    fn restricted_odd_examples() {
        let v = gen_restricted_odd(2, 1, 3).unwrap();
        assert_eq!(show(&v), ["()", "(1)", "(1,1)", "(1,1,1)"]);
        let v = gen_restricted_odd(2, 2, 3).unwrap();
        assert_eq!(show(&v), ["()", "(1)", "(1,1)", "(3)", "(1,1,1)"]);
        // k = 0 restricts every part, matching L(n,0) = {()}
        let v = gen_restricted_odd(1, 0, 2).unwrap();
        assert_eq!(show(&v), ["()"]);
    }

    #[test]
    fn exact_t_examples() {
        let v = gen_restricted_odd_exact_t(Some(2), 1, 1, Some(2), 4).unwrap();
        assert_eq!(show(&v), ["(3)", "(3,1)"]);
        let v = gen_restricted_odd_exact_t(Some(2), 0, 1, Some(2), 3).unwrap();
        assert_eq!(show(&v), ["()", "(1)", "(1,1)", "(1,1,1)"]);
        let v = gen_restricted_odd_exact_t(Some(3), 2, 1, Some(3), 8).unwrap();
        assert_eq!(show(&v), ["(3,3)", "(3,3,1)", "(5,3)", "(3,3,1,1)"]);
    }

    #[test]
    fn plain_examples() {
        let v = gen_plain(PlainKind::KNonnegParts(2), 2).unwrap();
        assert_eq!(show(&v), ["(0,0)", "(1,0)", "(2,0)", "(1,1)"]);
        let v = gen_plain(PlainKind::DistinctKParts(2), 3).unwrap();
        assert_eq!(show(&v), ["(2,1)"]);
        let v = gen_plain(PlainKind::MPositiveOfN { n: 2, m: 1 }, 2).unwrap();
        assert_eq!(show(&v), ["(1,0)", "(2,0)"]);
        let v = gen_plain(PlainKind::MaxPartK(2), 3).unwrap();
        assert_eq!(show(&v), ["()", "(1)", "(2)", "(1,1)", "(2,1)", "(1,1,1)"]);
    }

    #[test]
    fn durfee() {
        assert_eq!(durfee_rectangle(&[]), 0);
        assert_eq!(durfee_rectangle(&[1, 1, 1]), 1);
        assert_eq!(durfee_rectangle(&[5, 3, 1]), 2);
        assert_eq!(durfee_rectangle(&[5, 5, 5]), 3);
        let v = Family::OddDurfee { k: 2 }.enumerate(8).unwrap();
        assert_eq!(show(&v), ["(3,3)", "(3,3,1)", "(5,3)", "(3,3,1,1)"]);
    }

    #[test]
    fn bar_last_zero_is_previous_bar() {
        let f = Family::LectureHallBar { n: 4, k: 3, last: Some(0) };
        let got: Vec<Vec<u32>> = f.enumerate(9).unwrap().into_iter().map(|p| p.parts).collect();
        let want: Vec<Vec<u32>> = gen_lecture_hall(4, 2, 9, true)
            .unwrap()
            .into_iter()
            .map(|p| {
                let mut v = p.parts;
                v.push(0);
                v
            })
            .collect();
        assert_eq!(got, want);
        for p in &got {
            f.check(p).unwrap();
        }
    }

    #[test]
    fn check_reports_index() {
        let f = Family::lecture_hall(3);
        assert!(f.check(&[3, 2, 1]).is_ok());
        match f.check(&[1, 2, 0]) {
            Err(Error::NotInFamily { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {:?}", other),
        }
    }
}
