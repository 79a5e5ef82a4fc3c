use alloc::vec;
use alloc::vec::Vec;

use super::{run_check_report, CheckId, CheckKind, CheckParams, CheckReport, CheckSpec};
use crate::closedform::BuildOptions;

/// Parameter ranges of the suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `n` for checks ranging over `n` and `0 <= k <= n`.
    pub nmax: u32,
    /// Truncation order of every series comparison.
    pub order: u64,
    /// Largest `k` for the checks that take `n` large.
    pub kmax: u32,
    /// Image weight window of the bijection checks.
    pub bijection_weight: u64,
    /// Largest fixed last part.
    pub last_max: u32,
    /// Largest part of the `mu` the image checks range over.
    pub mu_part_max: u32,
    /// Run only these checks; empty means all.
    pub only: Vec<CheckId>,
    pub options: BuildOptions,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            nmax: 5,
            order: 15,
            kmax: 5,
            bijection_weight: 10,
            last_max: 4,
            mu_part_max: 2,
            only: Vec::new(),
            options: BuildOptions::default(),
        }
    }
}

/// Partitions into at most `len` parts, each at most `top`, padded to `len`.
fn boxed_partitions(len: u32, top: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &out {
            let cap = p.last().copied().unwrap_or(top);
            for x in 0..=cap {
                let mut q: Vec<u32> = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Every check instance of the suite, in a fixed order.
pub fn plan(config: &SuiteConfig) -> Vec<CheckSpec> {
    use CheckId as C;
    let (nmax, d, kmax) = (config.nmax, config.order, config.kmax);
    let mut out = Vec::new();
    for &id in CheckId::ALL {
        if !config.only.is_empty() && !config.only.contains(&id) {
            continue;
        }
        let order = if id.kind() == CheckKind::Bijection { config.bijection_weight } else { d };
        let mut push = |params: CheckParams| out.push(CheckSpec::new(id, params, order));
        let big = |k: u32| d as u32 + k;
        match id {
            C::Eq1 | C::Eq2 | C::Eq3 | C::Eq4 | C::Eq5 | C::Eq10 | C::Lu3 | C::Prop2 | C::Concl1 | C::Concl2 => {
                (0..=nmax).for_each(|n| push(CheckParams::n(n)))
            }
            C::QChuI | C::QChuII => (0..=nmax).for_each(|n| push(CheckParams::n(n))),
            C::Lnrec | C::Bme => (1..=nmax).for_each(|n| push(CheckParams::n(n))),
            C::Eq6 | C::Eq7 | C::Eq8 | C::RtlhBar | C::OetlhBar | C::Combi | C::Diff | C::Ident1 | C::Ident2 | C::Aident => {
                for n in 0..=nmax {
                    (0..=n).for_each(|k| push(CheckParams::nk(n, k)));
                }
            }
            C::Eq9 => {
                for n in 0..=nmax {
                    (0..=n + 1).for_each(|k| push(CheckParams::nk(n, k)));
                }
            }
            C::Ref2Plus => {
                for n in 1..=nmax {
                    (1..=n).for_each(|k| push(CheckParams::nk(n, k)));
                }
                (1..=kmax).for_each(|k| push(CheckParams::nk(big(k), k)));
            }
            C::Ident2Lim | C::Ref1 | C::Ref2 | C::Transpose => (0..=kmax).for_each(|k| push(CheckParams::k(k))),
            C::Fin3 => (1..=kmax.div_ceil(2)).for_each(|k| push(CheckParams::k(k))),
            C::Map1 => {
                for n in 1..=nmax {
                    (0..=(n - 1) / 2).for_each(|k| push(CheckParams::nk(n, k)));
                }
            }
            C::Map2 => {
                for n in 0..=nmax {
                    (0..=n / 2).for_each(|k| push(CheckParams::nk(n, k)));
                }
            }
            C::L2krecurr | C::Oddeq => {
                for n in 2..=nmax {
                    (1..=n / 2).for_each(|k| push(CheckParams::nk(n, k)));
                }
            }
            C::A2krecurr => {
                for n in 1..=nmax {
                    (1..=n.div_ceil(2)).for_each(|k| push(CheckParams::nk(n, k)));
                }
            }
            C::Bmeb | C::Bmeb1 => {
                let first = if id == C::Bmeb { 1 } else { 0 };
                for n in 2..=nmax {
                    for k in 1..=n / 2 {
                        (first..=config.last_max).for_each(|i| push(CheckParams::nki(n, k, i)));
                    }
                }
            }
            C::Irecurr => {
                for n in 3..=nmax {
                    for k in 1..=(n - 1) / 2 {
                        (1..=config.last_max).for_each(|i| push(CheckParams::nki(n, k, i)));
                    }
                }
            }
            C::Lu1 | C::Ans | C::Need | C::Au3 | C::Lu2 | C::Au2 => {
                for n in 0..=nmax {
                    for mu in boxed_partitions(n, config.mu_part_max) {
                        push(CheckParams::n(n).with_mu(mu));
                    }
                }
            }
            C::Aun => {
                for n in 0..=nmax {
                    for k in 0..=n {
                        for mu in boxed_partitions(k, config.mu_part_max) {
                            push(CheckParams::nk(n, k).with_mu(mu));
                        }
                    }
                }
            }
            C::BmeNk | C::ThetaNk => {
                for n in 1..=nmax {
                    (1..=n).for_each(|k| push(CheckParams::nk(n, k)));
                }
            }
        }
    }
    out
}

/// Runs the planned checks one after another, in plan order. Errors become
/// failing reports.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    plan(config).iter().map(|s| run_check_report(s, &config.options)).collect()
}
