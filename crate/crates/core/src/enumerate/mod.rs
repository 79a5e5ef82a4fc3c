//! Brute-force enumeration of every family, with statistics and the
//! `(mu, r)` decompositions.
//!
//! Nothing here consults a closed form: these listings are the ground truth
//! the closed forms are checked against.

mod decompose;
mod family;
mod generate;
mod oracle;
mod stats;

pub use decompose::{mu_r_decompose, reconstruct, satisfies_mu_r_conditions, Direction, MuRDecomposition};
pub use family::{parse_family, Family, FamilyKind};
pub use generate::{
    gen_anti_lecture_hall, gen_lecture_hall, gen_plain, gen_restricted_odd, gen_restricted_odd_exact_t,
    PlainKind,
};
pub use oracle::{gf_oracle, gf_oracle_filtered, max_weight_for, Assignment};
pub use stats::{statistics, StatVector, Statistic};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A finite sequence together with the family it was drawn from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartSequence {
    pub parts: Vec<u32>,
    pub family: Family,
}

impl PartSequence {
    pub fn new(parts: Vec<u32>, family: Family) -> PartSequence {
        PartSequence { parts, family }
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }
}

/// Writes `(3,1,0)`; the empty sequence is `()`.
pub fn render_parts(parts: &[u32]) -> String {
    let mut s = String::from("(");
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{}", p));
    }
    s.push(')');
    s
}

impl fmt::Display for PartSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_parts(&self.parts))
    }
}

/// Parses `(3,1,0)` or `3,1,0`; `()` is the empty sequence.
pub fn parse_parts(input: &str) -> crate::Result<Vec<u32>> {
    let t = input.trim();
    let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t).trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| crate::Error::Parse(alloc::format!("bad part {:?} in {:?}", p, input)))
        })
        .collect()
}
