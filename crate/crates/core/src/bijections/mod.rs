//! The BME map `L_{n-1} x N -> L_n`, its truncated variant
//! `BME_{n,k}: Lbar_{n-1,k-1} x N -> Lbar_{n,k}` and the anti-lecture hall
//! variant `Theta_{n,k}: A_{n,k-1} x N -> A_{n,k}`, with exhaustive checks
//! over a weight window.
//!
//! Positions the formulas reference beyond the end of `lambda` read as 0,
//! and so does a ceiling term whose numerator is such a position.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::enumerate::{render_parts, Family};
use crate::verify::{CheckId, CheckParams, CheckReport, Status};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapId {
    Bme,
    BmeNk,
    ThetaNk,
}

impl MapId {
    pub const ALL: [MapId; 3] = [MapId::Bme, MapId::BmeNk, MapId::ThetaNk];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Bme => "BME",
            MapId::BmeNk => "BME_NK",
            MapId::ThetaNk => "THETA_NK",
        }
    }

    /// Case-insensitive lookup by name.
    pub fn from_name(s: &str) -> Option<MapId> {
        MapId::ALL.into_iter().find(|m| m.name().eq_ignore_ascii_case(s))
    }

    fn check_id(self) -> CheckId {
        match self {
            MapId::Bme => CheckId::Bme,
            MapId::BmeNk => CheckId::BmeNk,
            MapId::ThetaNk => CheckId::ThetaNk,
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One map with its parameters and the free part `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapInstance {
    pub map_id: MapId,
    pub n: u32,
    /// Absent for `BME`.
    pub k: Option<u32>,
    pub s: u32,
}

impl MapInstance {
    pub fn new(map_id: MapId, n: u32, k: Option<u32>, s: u32) -> Result<MapInstance> {
        let inst = MapInstance { map_id, n, k, s };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Domain(format!("{}: {}", self.map_id, msg)));
        match (self.map_id, self.k) {
            (MapId::Bme, None) if self.n >= 1 => Ok(()),
            (MapId::Bme, None) => bad("requires n >= 1"),
            (MapId::Bme, Some(_)) => bad("takes no k"),
            (_, Some(k)) if self.n >= k && k >= 1 => Ok(()),
            (_, Some(_)) => bad("requires n >= k >= 1"),
            (_, None) => bad("requires k"),
        }
    }

    /// Length of the images.
    fn len(&self) -> u32 {
        self.k.unwrap_or(self.n)
    }

    pub fn domain(&self) -> Family {
        let (n, k) = (self.n, self.len());
        match self.map_id {
            MapId::Bme => Family::LectureHall { n: n - 1, k: n - 1 },
            MapId::BmeNk => Family::LectureHallBar { n: n - 1, k: k - 1, last: None },
            MapId::ThetaNk => Family::AntiLectureHall { n, k: k - 1, last: None },
        }
    }

    pub fn codomain(&self) -> Family {
        let (n, k) = (self.n, self.len());
        match self.map_id {
            MapId::Bme => Family::LectureHall { n, k: n },
            MapId::BmeNk => Family::LectureHallBar { n, k, last: None },
            MapId::ThetaNk => Family::AntiLectureHall { n, k, last: None },
        }
    }

    /// The correction `c` in `|mu_o| = 2|lambda_o| - |lambda_e| + s + c`,
    /// which for even `k` depends on the last part `i` of `lambda`.
    pub fn law_offset(&self, lambda: &[u32]) -> i64 {
        let k = self.len();
        let i = i64::from(lambda.last().copied().unwrap_or(0));
        match self.map_id {
            MapId::Bme => 0,
            MapId::BmeNk if k % 2 == 1 => 1,
            // -floor((n-k) i / (n-k+1)), i.e. ceil(i/(n-k+1)) - i
            MapId::BmeNk => {
                let d = i64::from(self.n - k + 1);
                -((d - 1) * i / d)
            }
            MapId::ThetaNk if k % 2 == 1 => 0,
            MapId::ThetaNk => {
                let l = i / i64::from(self.n);
                -i - l
            }
        }
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `ceil(num * a / den)`, zero when `a` is zero (so a zero `den` is allowed).
fn ceil_ratio(num: u64, a: u64, den: u64) -> u64 {
    if a == 0 {
        0
    } else {
        ceil_div(num * a, den)
    }
}

/// Applies the map. `lambda` must be a member of the domain, padded to its
/// length.
pub fn apply(inst: &MapInstance, lambda: &[u32]) -> Result<Vec<u32>> {
    inst.validate()?;
    let domain = inst.domain();
    domain.check(lambda)?;
    let n = u64::from(inst.n);
    let k = inst.len() as usize;
    let s = u64::from(inst.s);
    let at = |j: usize| -> u64 {
        if j >= 1 && j <= lambda.len() {
            u64::from(lambda[j - 1])
        } else {
            0
        }
    };
    // `theta` shifts every ramp: position j of `A_{n,k}` has divisor n-k+j.
    let theta = inst.map_id == MapId::ThetaNk;
    let ramp = |j: u64| -> u64 {
        if theta {
            n + j - k as u64
        } else {
            n - j + 1
        }
    };
    let mut mu = vec![0u64; k];
    if inst.map_id == MapId::BmeNk && k == 1 {
        mu[0] = s + 1;
    } else {
        mu[0] = if theta {
            ceil_ratio(ramp(1), at(1), ramp(1) + 1) + s
        } else {
            ceil_ratio(n, at(1), n - 1) + s
        };
        for j in 2..=k {
            let l = (j / 2) as u64;
            mu[j - 1] = if j % 2 == 0 {
                at(j - 1)
            } else if theta {
                // (n+2l-k+1) lambda_{2l+1} / (n+2l-k+2) and
                // (n+2l-k+1) lambda_{2l-1} / (n+2l-k)
                let r = ramp(2 * l + 1);
                let up = ceil_ratio(r, at(j), r + 1);
                let down = r * at(j - 2) / (r - 1);
                (up + down).checked_sub(at(j - 1)).ok_or_else(|| negative(inst, lambda))?
            } else {
                let up = ceil_ratio(n - 2 * l, at(j), n - 2 * l - 1);
                let down = (n - 2 * l) * at(j - 2) / (n - 2 * l + 1);
                let mut v = (up + down).checked_sub(at(j - 1)).ok_or_else(|| negative(inst, lambda))?;
                if inst.map_id == MapId::BmeNk && j == k {
                    v += 1;
                }
                v
            };
        }
    }
    mu.into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Error::Domain(String::from("image part overflows u32"))))
        .collect()
}

fn negative(inst: &MapInstance, lambda: &[u32]) -> Error {
    Error::Domain(format!("{} gives a negative part on {}", inst.map_id, render_parts(lambda)))
}

/// `(|lambda_o|, |lambda_e|)`
fn odd_even(p: &[u32]) -> (i64, i64) {
    let mut oe = (0, 0);
    for (j, &x) in p.iter().enumerate() {
        if j % 2 == 0 {
            oe.0 += i64::from(x);
        } else {
            oe.1 += i64::from(x);
        }
    }
    oe
}

/// `(3,1; 2) -> (7,3,1) [stats: ...]`
pub fn trace(inst: &MapInstance, lambda: &[u32]) -> Result<String> {
    let mu = apply(inst, lambda)?;
    let inner = render_parts(lambda);
    let (lo, le) = odd_even(lambda);
    let (mo, me) = odd_even(&mu);
    Ok(format!(
        "({}; {}) -> {} [stats: |lambda_o|={} |lambda_e|={} |mu_o|={} |mu_e|={} law={}]",
        &inner[1..inner.len() - 1],
        inst.s,
        render_parts(&mu),
        lo,
        le,
        mo,
        me,
        if law_holds(inst, lambda, &mu) { "ok" } else { "violated" }
    ))
}

fn law_holds(inst: &MapInstance, lambda: &[u32], mu: &[u32]) -> bool {
    let (lo, le) = odd_even(lambda);
    let (mo, me) = odd_even(mu);
    me == lo && mo == 2 * lo - le + i64::from(inst.s) + inst.law_offset(lambda)
}

/// Checks over every pair `(lambda, s)` whose image has weight at most
/// `max_weight`: images lie in the codomain, the map is injective, the
/// statistic laws hold, and every codomain member in the window is hit.
/// For even `k` the last part is also checked to be preserved, so the
/// restriction to each last-part class is onto that class.
///
/// The search is finite: `mu_1 >= s` bounds `s`, and `|mu_e| = |lambda_o|`
/// with `|lambda_e| <= rho |lambda_o|` bounds `lambda` (`rho = 1` on
/// partitions, `2` on anti-lecture hall compositions).
pub fn verify_bijection(map_id: MapId, n: u32, k: Option<u32>, max_weight: u64) -> Result<CheckReport> {
    let probe = MapInstance::new(map_id, n, k, 0)?;
    let params = CheckParams {
        n: Some(n),
        k,
        ..CheckParams::default()
    };
    let report = |status: Status, note: String| CheckReport {
        check_id: map_id.check_id(),
        params: params.clone(),
        order: max_weight,
        status,
        witness: None,
        elapsed: None,
        note: Some(note),
    };
    let rho = if map_id == MapId::ThetaNk { 2 } else { 1 };
    let domain = probe.domain().enumerate((1 + rho) * max_weight)?;
    let codomain = probe.codomain();
    let even = k.is_some_and(|k| k % 2 == 0);
    let mut hit: BTreeMap<Vec<u32>, (Vec<u32>, u32)> = BTreeMap::new();
    for lambda in &domain {
        for s in 0..=max_weight as u32 {
            let inst = MapInstance { s, ..probe.clone() };
            let name = || format!("({}; {})", render_parts(&lambda.parts), s);
            let mu = match apply(&inst, &lambda.parts) {
                Ok(mu) => mu,
                Err(e) => return Ok(report(Status::Fail, format!("{}: {}", name(), e))),
            };
            if mu.iter().map(|&x| u64::from(x)).sum::<u64>() > max_weight {
                continue;
            }
            let shown = || format!("{} -> {}", name(), render_parts(&mu));
            if codomain.check(&mu).is_err() {
                return Ok(report(Status::Fail, format!("{} is outside {}", shown(), codomain)));
            }
            if !law_holds(&inst, &lambda.parts, &mu) {
                return Ok(report(Status::Fail, format!("{} violates the statistic law", shown())));
            }
            if even && mu.last() != lambda.parts.last() {
                return Ok(report(Status::Fail, format!("{} changes the last part", shown())));
            }
            if let Some((l2, s2)) = hit.insert(mu.clone(), (lambda.parts.clone(), s)) {
                return Ok(report(
                    Status::Fail,
                    format!("{} collides with ({}; {})", shown(), render_parts(&l2), s2),
                ));
            }
        }
    }
    let targets = codomain.enumerate(max_weight)?;
    for t in &targets {
        if !hit.contains_key(&t.parts) {
            return Ok(report(Status::Fail, format!("{} is not hit", t)));
        }
    }
    Ok(report(Status::Pass, format!("{} images, all of {} in window", hit.len(), codomain)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(map: MapId, n: u32, k: Option<u32>, s: u32, lambda: &[u32]) -> Vec<u32> {
        apply(&MapInstance::new(map, n, k, s).unwrap(), lambda).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(run(MapId::Bme, 2, None, 1, &[3]), vec![7, 3]);
        assert_eq!(run(MapId::BmeNk, 3, Some(3), 0, &[2, 1]), vec![3, 2, 1]);
        assert_eq!(run(MapId::ThetaNk, 2, Some(2), 0, &[3]), vec![2, 3]);
        assert_eq!(run(MapId::BmeNk, 2, Some(1), 4, &[]), vec![5]);
        assert_eq!(run(MapId::Bme, 1, None, 4, &[]), vec![4]);
    }

    #[test]
    fn trace_format() {
        let inst = MapInstance::new(MapId::Bme, 2, None, 1).unwrap();
        assert_eq!(
            trace(&inst, &[3]).unwrap(),
            "(3; 1) -> (7,3) [stats: |lambda_o|=3 |lambda_e|=0 |mu_o|=7 |mu_e|=3 law=ok]"
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(MapInstance::new(MapId::Bme, 0, None, 0).is_err());
        assert!(MapInstance::new(MapId::ThetaNk, 2, Some(3), 0).is_err());
        let inst = MapInstance::new(MapId::Bme, 3, None, 0).unwrap();
        assert!(apply(&inst, &[1, 2]).is_err());
        let inst = MapInstance::new(MapId::Bme, 1, None, 0).unwrap();
        assert!(apply(&inst, &[1]).is_err());
    }

    #[test]
    fn verifies_small_windows() {
        assert!(verify_bijection(MapId::Bme, 2, None, 8).unwrap().passed());
        assert!(verify_bijection(MapId::BmeNk, 3, Some(2), 8).unwrap().passed());
        assert!(verify_bijection(MapId::ThetaNk, 3, Some(3), 8).unwrap().passed());
    }
}
