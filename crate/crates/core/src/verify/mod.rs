//! Named checks comparing two independently built series coefficient by
//! coefficient, and the suite that runs them over parameter ranges.

mod checks;
mod plan;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_bigint::BigInt;

use crate::closedform::BuildOptions;
use crate::enumerate::render_parts;
use crate::qseries::{render_exps, Exps, GradedSeries, Monomial};
use crate::{Error, Result};

pub use checks::{check_qchu, QChuVariant};
pub use plan::{plan, run_suite, SuiteConfig};

/// What kind of statement a check verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Theorem,
    Recurrence,
    QChu,
    Bijection,
}

macro_rules! check_ids {
    ($($v:ident => $name:literal, $kind:ident;)*) => {
        /// Every named check.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId { $($v),* }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$v),*];

            pub fn name(self) -> &'static str {
                match self { $(CheckId::$v => $name),* }
            }

            pub fn kind(self) -> CheckKind {
                match self { $(CheckId::$v => CheckKind::$kind),* }
            }
        }
    };
}

check_ids! {
    Eq1 => "EQ1", Theorem;
    Eq2 => "EQ2", Theorem;
    Eq3 => "EQ3", Theorem;
    Eq4 => "EQ4", Theorem;
    Eq5 => "EQ5", Theorem;
    Eq6 => "EQ6", Theorem;
    Eq7 => "EQ7", Theorem;
    Eq8 => "EQ8", Theorem;
    Eq9 => "EQ9", Theorem;
    Eq10 => "EQ10", Theorem;
    RtlhBar => "RTLH_BAR", Theorem;
    OetlhBar => "OETLH_BAR", Theorem;
    Combi => "COMBI", Theorem;
    Diff => "DIFF", Theorem;
    Lu1 => "LU1", Theorem;
    Ans => "ANS", Theorem;
    Ident1 => "IDENT1", Theorem;
    Ident2 => "IDENT2", Theorem;
    Ident2Lim => "IDENT2LIM", Theorem;
    Fin3 => "FIN3", Theorem;
    Ref1 => "REF1", Theorem;
    Ref2 => "REF2", Theorem;
    Ref2Plus => "REF2PLUS", Theorem;
    Transpose => "TRANSPOSE", Theorem;
    Aident => "AIDENT", Theorem;
    Concl1 => "CONCL1", Theorem;
    Concl2 => "CONCL2", Theorem;
    Lu3 => "LU3", Recurrence;
    Prop2 => "PROP2", Recurrence;
    Lnrec => "LNREC", Recurrence;
    Map1 => "MAP1", Recurrence;
    Map2 => "MAP2", Recurrence;
    Bmeb => "BMEB", Recurrence;
    Bmeb1 => "BMEB1", Recurrence;
    L2krecurr => "L2KRECURR", Recurrence;
    A2krecurr => "A2KRECURR", Recurrence;
    Oddeq => "ODDEQ", Recurrence;
    Irecurr => "IRECURR", Recurrence;
    Need => "NEED", Recurrence;
    Au3 => "AU3", Recurrence;
    Lu2 => "LU2", Recurrence;
    Au2 => "AU2", Recurrence;
    Aun => "AUN", Recurrence;
    QChuI => "QCHU_I", QChu;
    QChuII => "QCHU_II", QChu;
    Bme => "BME", Bijection;
    BmeNk => "BME_NK", Bijection;
    ThetaNk => "THETA_NK", Bijection;
}

impl CheckId {
    /// Case-insensitive lookup by name.
    pub fn from_name(s: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters of one check instance; each check reads the fields it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub n: Option<u32>,
    pub k: Option<u32>,
    /// A fixed last part.
    pub i: Option<u32>,
    pub mu: Option<Vec<u32>>,
    /// The q-Chu arguments.
    pub a: Option<Monomial>,
    pub c: Option<Monomial>,
}

impl CheckParams {
    pub fn n(n: u32) -> CheckParams {
        CheckParams {
            n: Some(n),
            ..CheckParams::default()
        }
    }

    pub fn k(k: u32) -> CheckParams {
        CheckParams {
            k: Some(k),
            ..CheckParams::default()
        }
    }

    pub fn nk(n: u32, k: u32) -> CheckParams {
        CheckParams {
            n: Some(n),
            k: Some(k),
            ..CheckParams::default()
        }
    }

    pub fn nki(n: u32, k: u32, i: u32) -> CheckParams {
        CheckParams {
            i: Some(i),
            ..CheckParams::nk(n, k)
        }
    }

    pub fn with_mu(mut self, mu: Vec<u32>) -> CheckParams {
        self.mu = Some(mu);
        self
    }

    /// Sets one parameter from text.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let int = || {
            value
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad value {:?} for {}", value, key)))
        };
        match key {
            "n" => self.n = Some(int()?),
            "k" => self.k = Some(int()?),
            "i" => self.i = Some(int()?),
            "mu" => self.mu = Some(crate::enumerate::parse_parts(value)?),
            "a" => self.a = Some(crate::qseries::parse_monomial(value)?),
            "c" => self.c = Some(crate::qseries::parse_monomial(value)?),
            _ => return Err(Error::Parse(format!("unknown parameter {:?}", key))),
        }
        Ok(())
    }

    pub(crate) fn need(&self, key: &'static str, id: CheckId) -> Result<u32> {
        let v = match key {
            "n" => self.n,
            "k" => self.k,
            "i" => self.i,
            _ => None,
        };
        v.ok_or_else(|| Error::Domain(format!("{} needs parameter {}", id, key)))
    }

    pub(crate) fn need_mu(&self, id: CheckId) -> Result<&[u32]> {
        self.mu
            .as_deref()
            .ok_or_else(|| Error::Domain(format!("{} needs parameter mu", id)))
    }
}

impl fmt::Display for CheckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = Vec::new();
        for (key, v) in [("n", self.n), ("k", self.k), ("i", self.i)] {
            if let Some(v) = v {
                items.push(format!("{}={}", key, v));
            }
        }
        if let Some(mu) = &self.mu {
            items.push(format!("mu={}", render_parts(mu)));
        }
        if let Some(a) = &self.a {
            items.push(format!("a={}", a));
        }
        if let Some(c) = &self.c {
            items.push(format!("c={}", c));
        }
        f.write_str(&items.join(","))
    }
}

/// One check to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: CheckId,
    pub params: CheckParams,
    pub order: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// The first exponent vector where two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub exps: Exps,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]: {} vs {}", render_exps(&self.exps), self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_id: CheckId,
    pub params: CheckParams,
    pub order: u64,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Filled in by callers that can read a clock.
    pub elapsed: Option<Duration>,
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// A failing report for a check that could not be evaluated.
    pub fn error(spec: &CheckSpec, e: &Error) -> CheckReport {
        CheckReport {
            check_id: spec.id,
            params: spec.params.clone(),
            order: spec.order,
            status: Status::Fail,
            witness: None,
            elapsed: None,
            note: Some(format!("error: {}", e)),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}({}) order={}", self.status, self.check_id, self.params, self.order)?;
        if let Some(w) = &self.witness {
            write!(f, " witness {}", w)?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({})", n)?;
        }
        Ok(())
    }
}

/// One labelled comparison inside a check.
pub(crate) struct Comparison {
    pub label: &'static str,
    pub left: GradedSeries,
    pub right: GradedSeries,
}

pub(crate) fn cmp(label: &'static str, left: GradedSeries, right: GradedSeries) -> Comparison {
    Comparison { label, left, right }
}

/// Passes iff every comparison agrees; the witness comes from the first
/// that does not.
pub(crate) fn verdict(spec: &CheckSpec, comparisons: Vec<Comparison>, note: Option<String>) -> Result<CheckReport> {
    let mut witness = None;
    let mut failed: Vec<&'static str> = Vec::new();
    for c in &comparisons {
        if let Some((exps, l, r)) = c.left.first_difference(&c.right)? {
            if witness.is_none() {
                witness = Some(Witness { exps, left: l, right: r });
            }
            failed.push(c.label);
        }
    }
    let mut notes: Vec<String> = Vec::new();
    if !failed.is_empty() {
        notes.push(format!("mismatch in {}", failed.join(", ")));
    }
    notes.extend(note);
    Ok(CheckReport {
        check_id: spec.id,
        params: spec.params.clone(),
        order: spec.order,
        status: if failed.is_empty() { Status::Pass } else { Status::Fail },
        witness,
        elapsed: None,
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    })
}

/// Runs one check. Out-of-domain parameters are an error.
pub fn run_check(spec: &CheckSpec, opts: &BuildOptions) -> Result<CheckReport> {
    checks::run(spec, opts)
}

/// Runs one check, turning errors into failing reports.
pub fn run_check_report(spec: &CheckSpec, opts: &BuildOptions) -> CheckReport {
    run_check(spec, opts).unwrap_or_else(|e| CheckReport::error(spec, &e))
}

/// `"3 of 120 checks failed"` or `"all 120 checks passed"`.
pub fn summary(reports: &[CheckReport]) -> String {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        format!("all {} checks passed", reports.len())
    } else {
        format!("{} of {} checks failed", failed, reports.len())
    }
}

impl CheckSpec {
    pub fn new(id: CheckId, params: CheckParams, order: u64) -> CheckSpec {
        CheckSpec { id, params, order }
    }
}

impl fmt::Display for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) order={}", self.id, self.params, self.order)
    }
}

#[cfg(test)]
mod tests;
