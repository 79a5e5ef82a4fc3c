use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Coarse tag of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    LectureHall,
    AntiLectureHall,
    PlainPartition,
    DistinctPartition,
    OddRestricted,
}

/// A combinatorial family with its parameters.
///
/// Fixed-length families (`L`, `Lbar`, `A`, `P`) store sequences padded with
/// zeros to their length so that index parity is positional. The others
/// store only positive parts, largest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `L(n,k)`: `lambda_i/(n-i+1)` nonincreasing over `k` positions.
    LectureHall { n: u32, k: u32 },
    /// `Lbar(n,k)`: members of `L(n,k)` with `k` positive parts, optionally
    /// with last part `last`. `last = 0` denotes `Lbar(n,k-1)` padded to
    /// length `k`.
    LectureHallBar { n: u32, k: u32, last: Option<u32> },
    /// `A(n,k)`: `lambda_i/(n-k+i)` nondecreasing over `k` positions,
    /// optionally with last part `last`.
    AntiLectureHall { n: u32, k: u32, last: Option<u32> },
    /// `R(n,k)`: odd parts at most `2n-1`, at most `floor(k/2)` of them in
    /// `2*ceil(k/2)+1 ..= 2(n-floor(k/2))-1`.
    RestrictedOdd { n: u32, k: u32 },
    /// `Rt(n,t,j,l)`: odd parts at most `2n-1`, exactly `t` of them in
    /// `2j+1 ..= 2l-1`. `None` means unbounded.
    RestrictedOddExact {
        n: Option<u32>,
        t: u32,
        j: u32,
        l: Option<u32>,
    },
    /// `Rplus(n,k)`: odd parts at most `2n-1`; with `c = ceil(k/2)`,
    /// `f = floor(k/2)`, `a` parts in `2c+1 ..= 2n-2f-1` and `b` parts equal
    /// to `2n-2f+1`, require `a <= f <= a + b`.
    RestrictedOddPlus { n: u32, k: u32 },
    /// `P(n)`: `n` nonnegative parts; `P(n,m)`: exactly `m` of them positive.
    Plain { n: u32, positive: Option<u32> },
    /// `D(k)`: exactly `k` distinct positive parts; `Dmax(k)`: at most `k`.
    Distinct { k: u32, at_most: bool },
    /// `Pmax(k)`: largest part at most `k`.
    MaxPart { k: u32 },
    /// `OddDurfee(k)`: odd parts, Durfee rectangle size `k`, i.e. `k` is the
    /// largest index with `lambda_k >= 2k-1`.
    OddDurfee { k: u32 },
}

impl Family {
    pub fn lecture_hall(n: u32) -> Family {
        Family::LectureHall { n, k: n }
    }

    pub fn anti_lecture_hall(n: u32) -> Family {
        Family::AntiLectureHall { n, k: n, last: None }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::LectureHall { .. } | Family::LectureHallBar { .. } => FamilyKind::LectureHall,
            Family::AntiLectureHall { .. } => FamilyKind::AntiLectureHall,
            Family::Plain { .. } | Family::MaxPart { .. } => FamilyKind::PlainPartition,
            Family::Distinct { .. } => FamilyKind::DistinctPartition,
            Family::RestrictedOdd { .. }
            | Family::RestrictedOddExact { .. }
            | Family::RestrictedOddPlus { .. }
            | Family::OddDurfee { .. } => FamilyKind::OddRestricted,
        }
    }

    /// Ramp parameter and length for the fixed-length families.
    pub fn ramp(&self) -> Option<(u32, u32)> {
        match *self {
            Family::LectureHall { n, k }
            | Family::LectureHallBar { n, k, .. }
            | Family::AntiLectureHall { n, k, .. } => Some((n, k)),
            _ => None,
        }
    }

    /// Checks the parameter domain.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(format!("{}: {}", self, msg)));
        match *self {
            Family::LectureHall { n, k } | Family::RestrictedOdd { n, k } | Family::RestrictedOddPlus { n, k } => {
                if k > n {
                    return bad("requires k <= n".into());
                }
            }
            Family::LectureHallBar { n, k, last } => {
                if k > n {
                    return bad("requires k <= n".into());
                }
                if k == 0 && last.is_some() {
                    return bad("a last part needs k >= 1".into());
                }
            }
            Family::AntiLectureHall { n, k, .. } => {
                if n + 1 < k {
                    return bad("requires n >= k-1".into());
                }
            }
            Family::RestrictedOddExact { n, j, l, .. } => {
                let l_ok = match (l, n) {
                    (Some(l), Some(n)) => j <= l && l <= n,
                    (Some(l), None) => j <= l,
                    (None, None) => true,
                    (None, Some(_)) => false,
                };
                if !l_ok {
                    return bad("requires j <= l <= n".into());
                }
            }
            Family::Plain { n, positive } => {
                if positive.is_some_and(|m| m > n) {
                    return bad("requires m <= n".into());
                }
            }
            Family::Distinct { .. } | Family::MaxPart { .. } | Family::OddDurfee { .. } => {}
        }
        Ok(())
    }

    /// Builds a family from a name and `key=value` parameters, e.g.
    /// `("A", [("n","2"),("k","2")])`.
    pub fn from_params(name: &str, params: &[(&str, &str)]) -> Result<Family> {
        let get = |key: &str| params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        let num = |key: &str| -> Result<Option<u32>> {
            match get(key) {
                None => Ok(None),
                Some(v) => v
                    .trim()
                    .parse::<u32>()
                    .map(Some)
                    .map_err(|_| Error::Parse(format!("{}={} is not a count", key, v))),
            }
        };
        let opt_inf = |key: &str| -> Result<Option<Option<u32>>> {
            match get(key) {
                None => Ok(None),
                Some(v) if v.trim() == "inf" => Ok(Some(None)),
                Some(_) => num(key).map(Some),
            }
        };
        let need = |key: &str| -> Result<u32> {
            num(key)?.ok_or_else(|| Error::Parse(format!("family {} needs {}=", name, key)))
        };
        for (k, _) in params {
            if !["n", "k", "m", "t", "j", "l", "last"].contains(k) {
                return Err(Error::Parse(format!("unknown family parameter {:?}", k)));
            }
        }
        let fam = match name {
            "L" => {
                let n = need("n")?;
                Family::LectureHall {
                    n,
                    k: num("k")?.unwrap_or(n),
                }
            }
            "Lbar" => Family::LectureHallBar {
                n: need("n")?,
                k: need("k")?,
                last: num("last")?,
            },
            "A" => {
                let n = need("n")?;
                Family::AntiLectureHall {
                    n,
                    k: num("k")?.unwrap_or(n),
                    last: num("last")?,
                }
            }
            "R" => Family::RestrictedOdd {
                n: need("n")?,
                k: need("k")?,
            },
            "Rplus" => Family::RestrictedOddPlus {
                n: need("n")?,
                k: need("k")?,
            },
            "Rt" => Family::RestrictedOddExact {
                n: opt_inf("n")?.ok_or_else(|| Error::Parse("family Rt needs n=".into()))?,
                t: need("t")?,
                j: need("j")?,
                l: opt_inf("l")?.ok_or_else(|| Error::Parse("family Rt needs l=".into()))?,
            },
            "P" => Family::Plain {
                n: need("n")?,
                positive: num("m")?,
            },
            "D" => Family::Distinct {
                k: need("k")?,
                at_most: false,
            },
            "Dmax" => Family::Distinct {
                k: need("k")?,
                at_most: true,
            },
            "Pmax" => Family::MaxPart { k: need("k")? },
            "OddDurfee" => Family::OddDurfee { k: need("k")? },
            _ => return Err(Error::Parse(format!("unknown family {:?}", name))),
        };
        fam.validate()?;
        Ok(fam)
    }
}

/// Positional parameter names of each family in its compact text form.
fn positional(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "L" | "Lbar" | "A" | "R" | "Rplus" => &["n", "k"],
        "Rt" => &["n", "t", "j", "l"],
        "P" => &["n", "m"],
        "D" | "Dmax" | "Pmax" | "OddDurfee" => &["k"],
        _ => return None,
    })
}

/// Parses the compact form `A(2,2;last=1)`, `L(3)`, `Rt(inf,1,2,inf)`.
pub fn parse_family(input: &str) -> Result<Family> {
    let t = input.trim();
    let (name, rest) = t
        .split_once('(')
        .ok_or_else(|| Error::Parse(format!("expected NAME(...) in {:?}", input)))?;
    let body = rest
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("missing ')' in {:?}", input)))?;
    let name = name.trim();
    let names = positional(name).ok_or_else(|| Error::Parse(format!("unknown family {:?}", name)))?;
    let (pos, named) = match body.split_once(';') {
        Some((p, n)) => (p, Some(n)),
        None => (body, None),
    };
    let mut params: Vec<(&str, &str)> = Vec::new();
    for (i, v) in pos.split(',').map(str::trim).filter(|v| !v.is_empty()).enumerate() {
        let key = names
            .get(i)
            .ok_or_else(|| Error::Parse(format!("too many parameters in {:?}", input)))?;
        params.push((key, v));
    }
    if let Some(named) = named {
        for kv in named.split(',').map(str::trim).filter(|v| !v.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {:?}", kv)))?;
            params.push((k.trim(), v.trim()));
        }
    }
    Family::from_params(name, &params)
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::LectureHall { n, k } => write!(f, "L({},{})", n, k),
            Family::LectureHallBar { n, k, last: None } => write!(f, "Lbar({},{})", n, k),
            Family::LectureHallBar { n, k, last: Some(i) } => write!(f, "Lbar({},{};last={})", n, k, i),
            Family::AntiLectureHall { n, k, last: None } => write!(f, "A({},{})", n, k),
            Family::AntiLectureHall { n, k, last: Some(i) } => write!(f, "A({},{};last={})", n, k, i),
            Family::RestrictedOdd { n, k } => write!(f, "R({},{})", n, k),
            Family::RestrictedOddExact { n, t, j, l } => write!(f, "Rt({},{},{},{})", opt(n), t, j, opt(l)),
            Family::RestrictedOddPlus { n, k } => write!(f, "Rplus({},{})", n, k),
            Family::Plain { n, positive: None } => write!(f, "P({})", n),
            Family::Plain { n, positive: Some(m) } => write!(f, "P({},{})", n, m),
            Family::Distinct { k, at_most: false } => write!(f, "D({})", k),
            Family::Distinct { k, at_most: true } => write!(f, "Dmax({})", k),
            Family::MaxPart { k } => write!(f, "Pmax({})", k),
            Family::OddDurfee { k } => write!(f, "OddDurfee({})", k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for t in [
            "L(3,2)",
            "Lbar(4,3;last=2)",
            "A(2,2)",
            "A(1,2;last=0)",
            "R(5,3)",
            "Rt(inf,2,1,inf)",
            "Rt(4,1,1,3)",
            "Rplus(6,4)",
            "P(3)",
            "P(3,1)",
            "D(2)",
            "Dmax(3)",
            "Pmax(4)",
            "OddDurfee(2)",
        ] {
            assert_eq!(parse_family(t).unwrap().to_string(), t);
        }
        assert_eq!(parse_family("L(3)").unwrap(), Family::lecture_hall(3));
        assert!(parse_family("L(2,3)").is_err());
        assert!(parse_family("A(1,3)").is_err());
        assert!(parse_family("Q(1)").is_err());
    }

    #[test]
    fn from_params() {
        let f = Family::from_params("A", &[("n", "2"), ("k", "2"), ("last", "1")]).unwrap();
        assert_eq!(
            f,
            Family::AntiLectureHall {
                n: 2,
                k: 2,
                last: Some(1)
            }
        );
        assert!(Family::from_params("A", &[("n", "2"), ("z", "1")]).is_err());
    }
}
