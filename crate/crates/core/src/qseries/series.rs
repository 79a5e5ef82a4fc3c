use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Bound;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::write_vars;
use super::{Exps, Grading, Monomial};
use crate::{Error, Result};

/// Storage key: grade first so that iteration is in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Key {
    grade: i64,
    exps: Exps,
}

/// Which ring operation [`GradedSeries::ring_op`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// A finite sum of monomials truncated at a grade bound.
///
/// Every stored term has a nonzero coefficient and a grade in
/// `0..=grading.bound()`. Two series with identical gradings are equal
/// exactly when their terms are.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSeries {
    grading: Grading,
    terms: BTreeMap<Key, BigInt>,
}

fn accumulate(terms: &mut BTreeMap<Key, BigInt>, key: Key, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl GradedSeries {
    pub fn zero(grading: Grading) -> GradedSeries {
        GradedSeries {
            grading,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(grading: Grading) -> GradedSeries {
        GradedSeries::constant(1, grading)
    }

    pub fn constant(c: impl Into<BigInt>, grading: Grading) -> GradedSeries {
        let mut s = GradedSeries::zero(grading);
        accumulate(
            &mut s.terms,
            Key {
                grade: 0,
                exps: Exps::default(),
            },
            c.into(),
        );
        s
    }

    /// A single monomial; zero if it lies beyond the bound.
    pub fn from_monomial(m: &Monomial, grading: Grading) -> Result<GradedSeries> {
        GradedSeries::from_monomials(core::iter::once(m.clone()), grading)
    }

    /// Sums the given monomials, dropping those beyond the bound. A monomial
    /// of negative grade is an error.
    pub fn from_monomials(
        monomials: impl IntoIterator<Item = Monomial>,
        grading: Grading,
    ) -> Result<GradedSeries> {
        let mut s = GradedSeries::zero(grading);
        for m in monomials {
            s.add_monomial(m)?;
        }
        Ok(s)
    }

    /// Adds one term in place, respecting the truncation.
    pub fn add_monomial(&mut self, m: Monomial) -> Result<()> {
        let grade = self.grading.grade(&m.exps);
        if grade < 0 {
            if m.is_zero() {
                return Ok(());
            }
            return Err(Error::NotPowerSeries {
                monomial: m.to_string(),
                grade,
            });
        }
        if grade <= self.grading.max_grade() {
            accumulate(&mut self.terms, Key { grade, exps: m.exps }, m.coeff);
        }
        Ok(())
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: by grade, then lexicographically by
    /// exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter().map(|(k, c)| (&k.exps, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms
            .iter()
            .map(|(k, c)| Monomial::new(c.clone(), k.exps))
    }

    /// Highest grade carrying a nonzero term.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|k| k.grade)
    }

    /// Exact coefficient of `exps`; asking beyond the bound is an error
    /// because truncation left it undetermined.
    pub fn coefficient(&self, exps: &Exps) -> Result<BigInt> {
        let grade = self.grading.grade(exps);
        if grade > self.grading.max_grade() {
            return Err(Error::BeyondBound {
                monomial: Monomial::new(1, *exps).to_string(),
                grade,
                bound: self.grading.bound(),
            });
        }
        Ok(self
            .terms
            .get(&Key { grade, exps: *exps })
            .cloned()
            .unwrap_or_default())
    }

    fn check_same(&self, other: &GradedSeries) -> Result<()> {
        if self.grading != other.grading {
            return Err(Error::GradingMismatch {
                left: self.grading.to_string(),
                right: other.grading.to_string(),
            });
        }
        Ok(())
    }

    pub fn ring_op(&self, other: &GradedSeries, op: RingOp) -> Result<GradedSeries> {
        match op {
            RingOp::Add => self.add(other),
            RingOp::Sub => self.sub(other),
            RingOp::Mul => self.mul(other),
        }
    }

    pub fn add(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, *k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, *k, -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> GradedSeries {
        GradedSeries {
            grading: self.grading,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.check_same(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let max = self.grading.max_grade();
        let mut terms = BTreeMap::new();
        for (ka, ca) in &small.terms {
            let room = max - ka.grade;
            for (kb, cb) in large.terms.iter() {
                if kb.grade > room {
                    break;
                }
                let key = Key {
                    grade: ka.grade + kb.grade,
                    exps: ka.exps.add(&kb.exps),
                };
                accumulate(&mut terms, key, ca * cb);
            }
        }
        Ok(GradedSeries {
            grading: self.grading,
            terms,
        })
    }

    /// Multiplies every term by `m` (grade >= 0) and re-truncates.
    pub fn scale_monomial(&self, m: &Monomial) -> Result<GradedSeries> {
        let g = m.grade(&self.grading);
        if g < 0 {
            return Err(Error::NegativeGrade {
                monomial: m.to_string(),
                grade: g,
            });
        }
        self.scale_into(m, self.grading)
    }

    /// Multiplies by `m` and truncates to `target`, whose weights must match.
    ///
    /// `m` may have negative grade provided this series was truncated high
    /// enough to determine every coefficient up to `target`'s bound; a
    /// product term landing at negative grade is an error.
    pub fn scale_into(&self, m: &Monomial, target: Grading) -> Result<GradedSeries> {
        if !self.grading.same_weights(&target) {
            return Err(Error::GradingMismatch {
                left: self.grading.to_string(),
                right: target.to_string(),
            });
        }
        let g = m.grade(&target);
        if self.grading.is_bounded() {
            let need = target.max_grade().saturating_sub(g);
            if self.grading.max_grade() < need {
                return Err(Error::InsufficientBound {
                    have: self.grading.bound(),
                    need: need.max(0) as u64,
                });
            }
        }
        let mut out = GradedSeries::zero(target);
        if m.is_zero() {
            return Ok(out);
        }
        for (k, c) in &self.terms {
            let grade = k.grade + g;
            if grade > target.max_grade() {
                break;
            }
            if grade < 0 {
                return Err(Error::NotPowerSeries {
                    monomial: Monomial::new(c * &m.coeff, k.exps.add(&m.exps)).to_string(),
                    grade,
                });
            }
            out.terms.insert(
                Key {
                    grade,
                    exps: k.exps.add(&m.exps),
                },
                c * &m.coeff,
            );
        }
        Ok(out)
    }

    /// Drops terms beyond a lower bound of the same weights.
    pub fn truncate(&self, target: Grading) -> Result<GradedSeries> {
        if !self.grading.same_weights(&target) {
            return Err(Error::GradingMismatch {
                left: self.grading.to_string(),
                right: target.to_string(),
            });
        }
        if target.bound() > self.grading.bound() {
            return Err(Error::InsufficientBound {
                have: self.grading.bound(),
                need: target.bound(),
            });
        }
        let max = target.max_grade();
        Ok(GradedSeries {
            grading: target,
            terms: self
                .terms
                .iter()
                .take_while(|(k, _)| k.grade <= max)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        })
    }

    /// `self * (1 - m)`.
    pub fn mul_one_minus(&self, m: &Monomial) -> Result<GradedSeries> {
        let g = m.grade(&self.grading);
        if g < 0 {
            return Err(Error::NegativeGrade {
                monomial: m.to_string(),
                grade: g,
            });
        }
        let max = self.grading.max_grade();
        let mut out = self.clone();
        for (k, c) in &self.terms {
            let grade = k.grade + g;
            if grade > max {
                break;
            }
            accumulate(
                &mut out.terms,
                Key {
                    grade,
                    exps: k.exps.add(&m.exps),
                },
                -(c * &m.coeff),
            );
        }
        Ok(out)
    }

    /// `self / (1 - m)` for `grade(m) >= 1`, i.e. `self * sum_j m^j`.
    ///
    /// Solves `t = self + m*t` in increasing grade order instead of
    /// expanding the geometric series.
    pub fn div_one_minus(&self, m: &Monomial) -> Result<GradedSeries> {
        let g = m.grade(&self.grading);
        if g < 1 || !self.grading.is_bounded() {
            return Err(Error::NonTerminating {
                monomial: m.to_string(),
                grade: g,
            });
        }
        let max = self.grading.max_grade();
        let mut out = self.terms.clone();
        let mut cursor: Option<Key> = None;
        loop {
            let next = match cursor {
                None => out.iter().next(),
                Some(k) => out.range((Bound::Excluded(k), Bound::Unbounded)).next(),
            };
            let Some((k, c)) = next else { break };
            let (k, c) = (*k, c.clone());
            cursor = Some(k);
            let grade = k.grade + g;
            if grade > max {
                continue;
            }
            accumulate(
                &mut out,
                Key {
                    grade,
                    exps: k.exps.add(&m.exps),
                },
                c * &m.coeff,
            );
        }
        Ok(GradedSeries {
            grading: self.grading,
            terms: out,
        })
    }

    /// First exponent vector, in canonical order, where the two series
    /// differ, with both coefficients.
    pub fn first_difference(&self, other: &GradedSeries) -> Result<Option<(Exps, BigInt, BigInt)>> {
        self.check_same(other)?;
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ok(None),
                (Some((ka, ca)), None) => return Ok(Some((ka.exps, (*ca).clone(), BigInt::zero()))),
                (None, Some((kb, cb))) => return Ok(Some((kb.exps, BigInt::zero(), (*cb).clone()))),
                (Some((ka, ca)), Some((kb, cb))) => {
                    if ka < kb {
                        return Ok(Some((ka.exps, (*ca).clone(), BigInt::zero())));
                    }
                    if kb < ka {
                        return Ok(Some((kb.exps, BigInt::zero(), (*cb).clone())));
                    }
                    if ca != cb {
                        return Ok(Some((ka.exps, (*ca).clone(), (*cb).clone())));
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }

    /// Replaces every coefficient by its value under `f`, dropping zeros.
    pub fn map_terms(&self, mut f: impl FnMut(&Exps, &BigInt) -> Option<Monomial>) -> Result<GradedSeries> {
        let mut out = GradedSeries::zero(self.grading);
        for (k, c) in &self.terms {
            if let Some(m) = f(&k.exps, c) {
                out.add_monomial(m)?;
            }
        }
        Ok(out)
    }

    /// True when every coefficient is positive.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c > BigInt::zero())
    }

    /// Sum of coefficients with fixed grade, e.g. the count of objects of
    /// a given weight.
    pub fn grade_totals(&self) -> Vec<(i64, BigInt)> {
        let mut out: Vec<(i64, BigInt)> = Vec::new();
        for (k, c) in &self.terms {
            match out.last_mut() {
                Some((g, acc)) if *g == k.grade => *acc += c,
                _ => out.push((k.grade, c.clone())),
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(k, c)| k.exps.is_zero() && c.is_one())
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = *c < BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if k.exps.is_zero() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write_vars(f, &k.exps)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedSeries[{}]({})", self.grading, self)
    }
}
