use core::fmt;

use super::{Monomial, Var, NVARS};
use crate::Result;

/// A monomial substitution `var -> Monomial`, identity by default.
///
/// Substitutions act on formal monomials before any truncation happens, so
/// reciprocal images such as `y -> x^-1` are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subst {
    images: [Option<Monomial>; NVARS],
}

impl Default for Subst {
    fn default() -> Self {
        Subst::identity()
    }
}

impl Subst {
    pub fn identity() -> Subst {
        Subst {
            images: Default::default(),
        }
    }

    pub fn from_pairs(pairs: &[(Var, Monomial)]) -> Subst {
        let mut s = Subst::identity();
        for (v, m) in pairs {
            s.set(*v, m.clone());
        }
        s
    }

    pub fn set(&mut self, v: Var, m: Monomial) {
        self.images[v.index()] = if m == Monomial::from(v) { None } else { Some(m) };
    }

    pub fn with(mut self, v: Var, m: Monomial) -> Subst {
        self.set(v, m);
        self
    }

    pub fn image(&self, v: Var) -> Monomial {
        self.images[v.index()].clone().unwrap_or_else(|| Monomial::from(v))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().all(Option::is_none)
    }

    /// Image of a monomial. Negative exponents need unit-coefficient images.
    pub fn apply(&self, m: &Monomial) -> Result<Monomial> {
        let mut out = Monomial::constant(m.coeff.clone());
        for (v, e) in m.exps.nonzero() {
            out = &out * &self.image(v).pow(i64::from(e))?;
        }
        Ok(out)
    }

    /// `self` applied after `inner`: `x -> self(inner(x))`.
    pub fn compose(&self, inner: &Subst) -> Result<Subst> {
        let mut out = Subst::identity();
        for v in Var::ALL {
            out.set(v, self.apply(&inner.image(v))?);
        }
        Ok(out)
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::DISPLAY_ORDER {
            if let Some(m) = &self.images[v.index()] {
                if !first {
                    f.write_str(", ")?;
                }
                first = false;
                write!(f, "{}->{}", v, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn apply_and_compose() {
        let x2y = Monomial::from_pairs(1, &[(Var::X, 2), (Var::Y, 1)]);
        let s = Subst::identity().with(Var::X, x2y).with(Var::Y, Var::X.pow(-1));
        let m = Monomial::from_pairs(3, &[(Var::X, 1), (Var::Y, 1)]);
        assert_eq!(s.apply(&m).unwrap(), Monomial::from_pairs(3, &[(Var::X, 1), (Var::Y, 1)]));
        let ss = s.compose(&s).unwrap();
        // x -> (x^2 y)^2 x^-1 = x^3 y^2, y -> (x^2 y)^-1
        assert_eq!(ss.image(Var::X), Monomial::from_pairs(1, &[(Var::X, 3), (Var::Y, 2)]));
        assert_eq!(ss.image(Var::Y), Monomial::from_pairs(1, &[(Var::X, -2), (Var::Y, -1)]));
        assert_eq!(s.to_string(), "x->x^2*y, y->x^-1");
    }
}
