use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{Family, PartSequence};
use crate::{Error, Result};

/// A statistic a generating function can track.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    /// `|lambda|`
    Weight,
    /// `|lambda_o|`, the sum of parts at odd positions.
    OddIndexSum,
    /// `|lambda_e|`, the sum of parts at even positions.
    EvenIndexSum,
    /// `|ceil(lambda)|` with divisors `n-i+1`.
    CeilWeight,
    /// `o(ceil(lambda))`
    CeilOddCount,
    /// `|floor(lambda)|` with divisors `n-k+i`.
    FloorWeight,
    /// `o(floor(lambda))`
    FloorOddCount,
    PositiveParts,
    LastPart,
    /// `o(lambda)`
    OddPartCount,
}

impl Statistic {
    pub const ALL: [Statistic; 10] = [
        Statistic::Weight,
        Statistic::OddIndexSum,
        Statistic::EvenIndexSum,
        Statistic::CeilWeight,
        Statistic::CeilOddCount,
        Statistic::FloorWeight,
        Statistic::FloorOddCount,
        Statistic::PositiveParts,
        Statistic::LastPart,
        Statistic::OddPartCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Weight => "weight",
            Statistic::OddIndexSum => "odd_index_sum",
            Statistic::EvenIndexSum => "even_index_sum",
            Statistic::CeilWeight => "ceil_weight",
            Statistic::CeilOddCount => "ceil_odd_count",
            Statistic::FloorWeight => "floor_weight",
            Statistic::FloorOddCount => "floor_odd_count",
            Statistic::PositiveParts => "positive_parts",
            Statistic::LastPart => "last_part",
            Statistic::OddPartCount => "odd_part_count",
        }
    }

    pub fn from_name(s: &str) -> Option<Statistic> {
        Statistic::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every statistic of one sequence. Images that are undefined for the
/// family (ceiling outside lecture hall families, floor outside anti-lecture
/// hall families or over a zero divisor) are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatVector {
    pub weight: u64,
    pub odd_index_sum: u64,
    pub even_index_sum: u64,
    pub ceil_image: Option<Vec<u32>>,
    pub floor_image: Option<Vec<u32>>,
    pub ceil_weight: Option<u64>,
    pub ceil_odd_count: Option<u64>,
    pub floor_weight: Option<u64>,
    pub floor_odd_count: Option<u64>,
    pub positive_parts: u64,
    pub last_part: u64,
    pub odd_part_count: u64,
}

fn odd_count(p: &[u32]) -> u64 {
    p.iter().filter(|&&x| x % 2 == 1).count() as u64
}

fn total(p: &[u32]) -> u64 {
    p.iter().map(|&x| u64::from(x)).sum()
}

/// Divisors `n-i+1` of the ceiling image, if the family has one.
pub(crate) fn ceil_divisors(family: &Family, len: usize) -> Option<Vec<u64>> {
    match *family {
        Family::LectureHall { n, .. } | Family::LectureHallBar { n, .. } => {
            Some((1..=len as u64).map(|i| u64::from(n) + 1 - i).collect())
        }
        _ => None,
    }
}

/// Divisors `n-k+i` of the floor image, if the family has one and none of
/// them is zero.
pub(crate) fn floor_divisors(family: &Family, len: usize) -> Option<Vec<u64>> {
    match *family {
        Family::AntiLectureHall { n, k, .. } => {
            let base = i64::from(n) - i64::from(k);
            if base < 0 {
                return None;
            }
            Some((1..=len as i64).map(|i| (base + i) as u64).collect())
        }
        _ => None,
    }
}

/// Computes every statistic of `seq`.
pub fn statistics(seq: &PartSequence) -> StatVector {
    let p = &seq.parts;
    let odd_index_sum = p.iter().step_by(2).map(|&x| u64::from(x)).sum();
    let even_index_sum = p.iter().skip(1).step_by(2).map(|&x| u64::from(x)).sum();
    let ceil_image = ceil_divisors(&seq.family, p.len()).map(|d| {
        p.iter()
            .zip(&d)
            .map(|(&x, &d)| u64::from(x).div_ceil(d) as u32)
            .collect::<Vec<u32>>()
    });
    let floor_image = floor_divisors(&seq.family, p.len()).map(|d| {
        p.iter()
            .zip(&d)
            .map(|(&x, &d)| (u64::from(x) / d) as u32)
            .collect::<Vec<u32>>()
    });
    StatVector {
        weight: total(p),
        odd_index_sum,
        even_index_sum,
        ceil_weight: ceil_image.as_deref().map(total),
        ceil_odd_count: ceil_image.as_deref().map(odd_count),
        floor_weight: floor_image.as_deref().map(total),
        floor_odd_count: floor_image.as_deref().map(odd_count),
        ceil_image,
        floor_image,
        positive_parts: p.iter().filter(|&&x| x > 0).count() as u64,
        last_part: p.last().map_or(0, |&x| u64::from(x)),
        odd_part_count: odd_count(p),
    }
}

impl StatVector {
    /// Value of one statistic; an undefined image is an error naming the
    /// family.
    pub fn get(&self, s: Statistic, family: &Family) -> Result<u64> {
        let undefined = || Error::UndefinedStatistic {
            statistic: s.name(),
            family: format!("{}", family),
        };
        Ok(match s {
            Statistic::Weight => self.weight,
            Statistic::OddIndexSum => self.odd_index_sum,
            Statistic::EvenIndexSum => self.even_index_sum,
            Statistic::CeilWeight => self.ceil_weight.ok_or_else(undefined)?,
            Statistic::CeilOddCount => self.ceil_odd_count.ok_or_else(undefined)?,
            Statistic::FloorWeight => self.floor_weight.ok_or_else(undefined)?,
            Statistic::FloorOddCount => self.floor_odd_count.ok_or_else(undefined)?,
            Statistic::PositiveParts => self.positive_parts,
            Statistic::LastPart => self.last_part,
            Statistic::OddPartCount => self.odd_part_count,
        })
    }
}

/// Whether `s` is defined for every member of `family`.
pub(crate) fn defined_for(s: Statistic, family: &Family) -> bool {
    match s {
        Statistic::CeilWeight | Statistic::CeilOddCount => ceil_divisors(family, 1).is_some(),
        Statistic::FloorWeight | Statistic::FloorOddCount => floor_divisors(family, 1).is_some(),
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn examples() {
        let s = statistics(&PartSequence::new(vec![2, 1], Family::LectureHall { n: 3, k: 2 }));
        assert_eq!((s.weight, s.odd_index_sum, s.even_index_sum), (3, 2, 1));
        assert_eq!(s.ceil_image, Some(vec![1, 1]));
        assert_eq!(s.ceil_odd_count, Some(2));

        let s = statistics(&PartSequence::new(vec![], Family::MaxPart { k: 2 }));
        assert_eq!((s.weight, s.positive_parts, s.last_part, s.odd_part_count), (0, 0, 0, 0));

        let f = Family::AntiLectureHall { n: 2, k: 1, last: None };
        let s = statistics(&PartSequence::new(vec![3], f));
        assert_eq!(s.floor_image, Some(vec![1]));
        assert_eq!(s.floor_odd_count, Some(1));
        assert!(s.get(Statistic::CeilWeight, &f).is_err());
    }

    #[test]
    fn zero_divisor_flags_floor_absent() {
        let f = Family::AntiLectureHall { n: 1, k: 2, last: None };
        let s = statistics(&PartSequence::new(vec![1, 1], f));
        assert_eq!(s.floor_image, None);
        assert!(!defined_for(Statistic::FloorWeight, &f));
    }
}
