use alloc::string::ToString;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Grading;
use crate::{Error, Result};

/// Formal variables a series may carry.
///
/// The declaration order is the lexicographic order used to sort exponent
/// vectors of equal grade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    U,
    V,
    X,
    Y,
    Z,
    A,
    C,
}

/// Number of formal variables.
pub const NVARS: usize = 8;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Q,
        Var::U,
        Var::V,
        Var::X,
        Var::Y,
        Var::Z,
        Var::A,
        Var::C,
    ];

    /// Order in which variables are written inside a rendered monomial,
    /// e.g. `u^2*v*q^3`.
    pub const DISPLAY_ORDER: [Var; NVARS] = [
        Var::U,
        Var::V,
        Var::X,
        Var::Y,
        Var::Z,
        Var::A,
        Var::C,
        Var::Q,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::U => "u",
            Var::V => "v",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::A => "a",
            Var::C => "c",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    /// The monomial `self^e`.
    pub fn pow(self, e: i32) -> Monomial {
        let mut exps = Exps::default();
        exps.set(self, e);
        Monomial::new(BigInt::one(), exps)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Signed exponent vector indexed by [`Var`]. A zero entry means the
/// variable is absent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exps([i32; NVARS]);

impl Exps {
    pub fn from_pairs(pairs: &[(Var, i32)]) -> Exps {
        let mut e = Exps::default();
        for &(v, k) in pairs {
            e.0[v.index()] += k;
        }
        e
    }

    pub fn get(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn set(&mut self, v: Var, e: i32) {
        self.0[v.index()] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Exps) -> Exps {
        let mut out = *self;
        for (o, r) in out.0.iter_mut().zip(other.0) {
            *o += r;
        }
        out
    }

    pub fn scale(&self, k: i32) -> Exps {
        let mut out = *self;
        for o in out.0.iter_mut() {
            *o *= k;
        }
        out
    }

    pub fn neg(&self) -> Exps {
        self.scale(-1)
    }

    /// Nonzero `(variable, exponent)` pairs in declaration order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        Var::ALL
            .into_iter()
            .map(|v| (v, self.get(v)))
            .filter(|&(_, e)| e != 0)
    }

    pub(crate) fn raw(&self) -> &[i32; NVARS] {
        &self.0
    }
}

/// A single term `coeff * prod var^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: BigInt,
    pub exps: Exps,
}

impl Monomial {
    pub fn new(coeff: impl Into<BigInt>, exps: Exps) -> Monomial {
        Monomial {
            coeff: coeff.into(),
            exps,
        }
    }

    pub fn one() -> Monomial {
        Monomial::new(1, Exps::default())
    }

    pub fn constant(c: impl Into<BigInt>) -> Monomial {
        Monomial::new(c, Exps::default())
    }

    /// `coeff * prod v^e` from `(v, e)` pairs.
    pub fn from_pairs(coeff: impl Into<BigInt>, pairs: &[(Var, i32)]) -> Monomial {
        Monomial::new(coeff, Exps::from_pairs(pairs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.coeff.abs().is_one()
    }

    pub fn grade(&self, grading: &Grading) -> i64 {
        grading.grade(&self.exps)
    }

    pub fn neg(&self) -> Monomial {
        Monomial::new(-&self.coeff, self.exps)
    }

    /// Multiplicative inverse; only defined for coefficients `1` and `-1`.
    pub fn inverse(&self) -> Result<Monomial> {
        if !self.is_unit() {
            return Err(Error::NonUnitCoefficient(self.to_string()));
        }
        Ok(Monomial::new(self.coeff.clone(), self.exps.neg()))
    }

    /// `self^e`. Negative powers need a unit coefficient.
    pub fn pow(&self, e: i64) -> Result<Monomial> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let k = e.unsigned_abs();
        let k32 = i32::try_from(k).map_err(|_| Error::Domain("exponent overflow".into()))?;
        Ok(Monomial::new(
            num_traits::pow(base.coeff, k as usize),
            base.exps.scale(k32),
        ))
    }

    /// Same exponents, coefficient `1`.
    pub fn unit_part(&self) -> Monomial {
        Monomial::new(1, self.exps)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial::new(&self.coeff * &rhs.coeff, self.exps.add(&rhs.exps))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl From<Var> for Monomial {
    fn from(v: Var) -> Monomial {
        v.pow(1)
    }
}

/// Writes the variable part of a monomial (`u^2*v*q^3`), or nothing for
/// exponent zero. Returns whether anything was written.
pub(crate) fn write_vars(f: &mut fmt::Formatter<'_>, exps: &Exps) -> core::result::Result<bool, fmt::Error> {
    let mut first = true;
    for v in Var::DISPLAY_ORDER {
        let e = exps.get(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", v)?;
        } else {
            write!(f, "{}^{}", v, e)?;
        }
    }
    Ok(!first)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_zero() {
            return write!(f, "{}", self.coeff);
        }
        if self.coeff == BigInt::from(-1) {
            f.write_str("-")?;
        } else if !self.coeff.is_one() {
            write!(f, "{}*", self.coeff)?;
        }
        write_vars(f, &self.exps)?;
        Ok(())
    }
}
