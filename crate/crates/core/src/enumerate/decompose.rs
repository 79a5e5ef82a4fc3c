use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::stats::{ceil_divisors, floor_divisors};
use super::Family;
use crate::{Error, Result};

/// Which side of the ramp the decomposition uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `lambda_i = (n-i+1) mu_i - r_i`, `0 <= r_i <= n-i`.
    LectureHall,
    /// `lambda_i = (n-k+i) mu_i + r_i`, `0 <= r_i < n-k+i`.
    Anti,
}

/// `lambda` split into a quotient sequence `mu` and remainders `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuRDecomposition {
    pub direction: Direction,
    pub mu: Vec<u32>,
    pub r: Vec<u32>,
    /// `multiplicities[j]` is the number of positions with `mu_i = j`, for
    /// `j` in `0..=mu_1`.
    pub multiplicities: Vec<usize>,
    /// Lecture hall: `ell[i]` is the number of positions with
    /// `mu >= mu_1 - i + 1`, for `i` in `0..=mu_1 + 1`. Anti: `ell[i]` is the
    /// number of positions with `mu >= i`, for `i` in `0..=mu_1 + 1`.
    pub ell: Vec<usize>,
}

fn direction_of(family: &Family) -> Option<Direction> {
    match family {
        Family::LectureHall { .. } | Family::LectureHallBar { .. } => Some(Direction::LectureHall),
        Family::AntiLectureHall { .. } => Some(Direction::Anti),
        _ => None,
    }
}

fn divisors(family: &Family, len: usize) -> Result<(Direction, Vec<u64>)> {
    let undefined = || Error::UndefinedStatistic {
        statistic: "mu_r",
        family: format!("{}", family),
    };
    let dir = direction_of(family).ok_or_else(undefined)?;
    let d = match dir {
        Direction::LectureHall => ceil_divisors(family, len),
        Direction::Anti => floor_divisors(family, len),
    };
    Ok((dir, d.ok_or_else(undefined)?))
}

/// Splits `lambda` by the ceiling (lecture hall) or floor (anti) of each
/// part over its ramp divisor. Rejects sequences outside the family.
pub fn mu_r_decompose(family: &Family, parts: &[u32]) -> Result<MuRDecomposition> {
    family.check(parts)?;
    decompose_unchecked(family, parts)
}

pub(crate) fn decompose_unchecked(family: &Family, parts: &[u32]) -> Result<MuRDecomposition> {
    let (direction, d) = divisors(family, parts.len())?;
    let mut mu = Vec::with_capacity(parts.len());
    let mut r = Vec::with_capacity(parts.len());
    for (&x, &d) in parts.iter().zip(&d) {
        let x = u64::from(x);
        let m = match direction {
            Direction::LectureHall => x.div_ceil(d),
            Direction::Anti => x / d,
        };
        mu.push(m as u32);
        r.push(match direction {
            Direction::LectureHall => (d * m - x) as u32,
            Direction::Anti => (x - d * m) as u32,
        });
    }
    let top = mu.iter().copied().max().unwrap_or(0) as usize;
    let mut multiplicities = vec![0usize; top + 1];
    for &m in &mu {
        multiplicities[m as usize] += 1;
    }
    let ell = (0..=top + 1)
        .map(|i| match direction {
            Direction::LectureHall => mu.iter().filter(|&&m| m as usize + i > top).count(),
            Direction::Anti => mu.iter().filter(|&&m| m as usize >= i).count(),
        })
        .collect();
    Ok(MuRDecomposition {
        direction,
        mu,
        r,
        multiplicities,
        ell,
    })
}

/// Rebuilds `lambda` from `mu` and `r`.
pub fn reconstruct(family: &Family, dec: &MuRDecomposition) -> Result<Vec<u32>> {
    let (direction, d) = divisors(family, dec.mu.len())?;
    Ok(dec
        .mu
        .iter()
        .zip(&dec.r)
        .zip(&d)
        .map(|((&m, &r), &d)| match direction {
            Direction::LectureHall => (d * u64::from(m) - u64::from(r)) as u32,
            Direction::Anti => (d * u64::from(m) + u64::from(r)) as u32,
        })
        .collect())
}

/// The `(mu, r)` membership criterion: `mu` is nonincreasing and, where `mu`
/// is constant, `r` is nondecreasing (lecture hall) or nonincreasing (anti).
///
/// Together with the family's positivity and last-part conditions this
/// accepts exactly the members of the ratio chain.
pub fn satisfies_mu_r_conditions(family: &Family, parts: &[u32]) -> Result<bool> {
    let Some((_, k)) = family.ramp() else {
        return Err(Error::UndefinedStatistic {
            statistic: "mu_r",
            family: format!("{}", family),
        });
    };
    if parts.len() != k as usize {
        return Ok(false);
    }
    let dec = decompose_unchecked(family, parts)?;
    for i in 1..parts.len() {
        let (a, b) = (dec.mu[i - 1], dec.mu[i]);
        if a < b {
            return Ok(false);
        }
        if a == b {
            let ok = match dec.direction {
                Direction::LectureHall => dec.r[i - 1] <= dec.r[i],
                Direction::Anti => dec.r[i - 1] >= dec.r[i],
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::generate::all_sequences;
    use super::*;

    #[test]
    fn examples() {
        let d = mu_r_decompose(&Family::lecture_hall(2), &[3, 1]).unwrap();
        assert_eq!((d.mu.clone(), d.r.clone()), (vec![2, 1], vec![1, 0]));
        assert_eq!(reconstruct(&Family::lecture_hall(2), &d).unwrap(), vec![3, 1]);

        let d = mu_r_decompose(&Family::lecture_hall(3), &[0, 0, 0]).unwrap();
        assert_eq!((d.mu, d.r), (vec![0, 0, 0], vec![0, 0, 0]));

        let d = mu_r_decompose(&Family::anti_lecture_hall(2), &[1, 2]).unwrap();
        assert_eq!((d.mu, d.r), (vec![1, 1], vec![0, 0]));

        assert!(mu_r_decompose(&Family::lecture_hall(2), &[1, 2]).is_err());
    }

    #[test]
    fn ell_and_multiplicities() {
        // lambda = (5,3,1) in L_3: mu = (2,2,1)
        let d = mu_r_decompose(&Family::lecture_hall(3), &[5, 3, 1]).unwrap();
        assert_eq!(d.mu, vec![2, 2, 1]);
        assert_eq!(d.multiplicities, vec![0, 1, 2]);
        assert_eq!(d.ell, vec![0, 2, 3, 3]);
    }

    #[test]
    fn criterion_matches_ratio_chain() {
        let mut families = Vec::new();
        for n in 0..=5u32 {
            for k in 0..=n.min(4) {
                families.push(Family::LectureHall { n, k });
            }
            for k in 0..=(n + 1).min(4) {
                if n + 1 > k {
                    families.push(Family::AntiLectureHall { n, k, last: None });
                }
            }
        }
        for f in families {
            let (_, k) = f.ramp().unwrap();
            for p in all_sequences(k as usize, 8) {
                let direct = f.check(&p).is_ok();
                assert_eq!(direct, satisfies_mu_r_conditions(&f, &p).unwrap(), "{} {:?}", f, p);
            }
        }
    }
}
