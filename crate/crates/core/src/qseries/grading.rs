use core::fmt;

use super::{Exps, Var, NVARS};

/// A linear grade functional on exponent vectors plus a truncation order.
///
/// `grade(m) = sum weights[var] * exps[var]`. A bound of [`Grading::UNBOUNDED`]
/// means no truncation, which only exact polynomials may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: [u32; NVARS],
    bound: u64,
}

impl Grading {
    pub const UNBOUNDED: u64 = u64::MAX;

    pub fn new(weights: &[(Var, u32)], bound: u64) -> Grading {
        let mut w = [0; NVARS];
        for &(v, k) in weights {
            w[v.index()] = k;
        }
        Grading { weights: w, bound }
    }

    /// `w_q = 1`, every other weight zero.
    pub fn q(bound: u64) -> Grading {
        Grading::new(&[(Var::Q, 1)], bound)
    }

    /// `w_x = w_y = 1`, every other weight zero.
    pub fn xy(bound: u64) -> Grading {
        Grading::new(&[(Var::X, 1), (Var::Y, 1)], bound)
    }

    pub fn weight(&self, v: Var) -> u32 {
        self.weights[v.index()]
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn is_bounded(&self) -> bool {
        self.bound != Self::UNBOUNDED
    }

    pub fn with_bound(&self, bound: u64) -> Grading {
        Grading {
            weights: self.weights,
            bound,
        }
    }

    /// Same weights, no truncation.
    pub fn unbounded(&self) -> Grading {
        self.with_bound(Self::UNBOUNDED)
    }

    pub fn same_weights(&self, other: &Grading) -> bool {
        self.weights == other.weights
    }

    pub fn grade(&self, exps: &Exps) -> i64 {
        self.weights
            .iter()
            .zip(exps.raw())
            .map(|(&w, &e)| i64::from(w) * i64::from(e))
            .sum()
    }

    /// The bound as a signed grade, saturating for unbounded gradings.
    pub fn max_grade(&self) -> i64 {
        i64::try_from(self.bound).unwrap_or(i64::MAX)
    }

    pub fn admits(&self, grade: i64) -> bool {
        grade >= 0 && grade <= self.max_grade()
    }

    /// Bound shifted by `delta`, saturating at zero. `None` when the shifted
    /// window is empty.
    pub fn shifted(&self, delta: i64) -> Option<Grading> {
        if !self.is_bounded() {
            return Some(*self);
        }
        let b = self.max_grade().checked_add(delta)?;
        if b < 0 {
            None
        } else {
            Some(self.with_bound(b as u64))
        }
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for v in Var::ALL {
            let w = self.weight(v);
            if w == 0 {
                continue;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{}:{}", v, w)?;
        }
        if self.is_bounded() {
            write!(f, "}}<={}", self.bound)
        } else {
            f.write_str("}<=inf")
        }
    }
}
