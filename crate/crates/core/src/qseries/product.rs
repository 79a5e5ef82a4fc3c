use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::analogs::{gaussian_poly, multinomial_poly, pochhammer_factors, poly_in};
use super::{GradedSeries, Grading, Length, Monomial, Subst};
use crate::{Error, Result};

/// One multiplicative piece of a closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `1 - m`
    OneMinus(Monomial),
    /// `1/(1 - m)`
    InvOneMinus(Monomial),
    /// `sum_j coeffs[j] * base^j`
    Poly { coeffs: Vec<BigInt>, base: Monomial },
    /// `(a; step)_len`, or its reciprocal.
    Pochhammer {
        a: Monomial,
        step: Monomial,
        len: Length,
        inverse: bool,
    },
}

/// `prefactor * prod factors`, kept symbolic until [`Product::eval`].
///
/// Evaluation rewrites factors whose monomials have negative grade so that
/// everything but the prefactor is a power series:
/// `1 - m = -m (1 - 1/m)`, `1/(1 - d) = -(1/d) / (1 - 1/d)` and a polynomial
/// in a negative-grade base is reversed. The remaining product is expanded
/// to a bound raised by the prefactor's deficit, then shifted into place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub prefactor: Monomial,
    pub factors: Vec<Factor>,
}

impl Default for Product {
    fn default() -> Self {
        Product::new(Monomial::one())
    }
}

impl Product {
    pub fn new(prefactor: Monomial) -> Product {
        Product {
            prefactor,
            factors: Vec::new(),
        }
    }

    pub fn times(mut self, m: &Monomial) -> Product {
        self.prefactor = &self.prefactor * m;
        self
    }

    pub fn one_minus(mut self, m: Monomial) -> Product {
        self.factors.push(Factor::OneMinus(m));
        self
    }

    pub fn over_one_minus(mut self, m: Monomial) -> Product {
        self.factors.push(Factor::InvOneMinus(m));
        self
    }

    pub fn poch(mut self, a: Monomial, step: Monomial, len: Length) -> Product {
        self.factors.push(Factor::Pochhammer {
            a,
            step,
            len,
            inverse: false,
        });
        self
    }

    pub fn over_poch(mut self, a: Monomial, step: Monomial, len: Length) -> Product {
        self.factors.push(Factor::Pochhammer {
            a,
            step,
            len,
            inverse: true,
        });
        self
    }

    pub fn gaussian(mut self, n: usize, m: usize, base: Monomial) -> Product {
        self.factors.push(Factor::Poly {
            coeffs: gaussian_poly(n, m),
            base,
        });
        self
    }

    pub fn multinomial(mut self, n: usize, parts: &[usize], base: Monomial) -> Result<Product> {
        self.factors.push(Factor::Poly {
            coeffs: multinomial_poly(n, parts)?,
            base,
        });
        Ok(self)
    }

    /// Appends every factor of `other` and multiplies the prefactors.
    pub fn extend(mut self, other: Product) -> Product {
        self.prefactor = &self.prefactor * &other.prefactor;
        self.factors.extend(other.factors);
        self
    }

    /// Applies a monomial substitution to every monomial in the product.
    pub fn substitute(&self, s: &Subst) -> Result<Product> {
        let mut out = Product::new(s.apply(&self.prefactor)?);
        for f in &self.factors {
            out.factors.push(match f {
                Factor::OneMinus(m) => Factor::OneMinus(s.apply(m)?),
                Factor::InvOneMinus(m) => Factor::InvOneMinus(s.apply(m)?),
                Factor::Poly { coeffs, base } => Factor::Poly {
                    coeffs: coeffs.clone(),
                    base: s.apply(base)?,
                },
                Factor::Pochhammer { a, step, len, inverse } => Factor::Pochhammer {
                    a: s.apply(a)?,
                    step: s.apply(step)?,
                    len: *len,
                    inverse: *inverse,
                },
            });
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero()
            || self.factors.iter().any(|f| match f {
                Factor::Poly { coeffs, .. } => coeffs.iter().all(Zero::is_zero),
                Factor::OneMinus(m) => m.coeff == BigInt::from(1) && m.exps.is_zero(),
                _ => false,
            })
    }

    pub fn eval(&self, grading: Grading) -> Result<GradedSeries> {
        if self.is_zero() {
            return Ok(GradedSeries::zero(grading));
        }
        let mut pre = self.prefactor.clone();
        let mut nums: Vec<Monomial> = Vec::new();
        let mut dens: Vec<Monomial> = Vec::new();
        let mut polys: Vec<(Vec<BigInt>, Monomial)> = Vec::new();
        let mut unbounded: Vec<(&Monomial, &Monomial, bool)> = Vec::new();

        let push_num = |m: Monomial, pre: &mut Monomial, nums: &mut Vec<Monomial>| -> Result<()> {
            if m.is_zero() {
                return Ok(());
            }
            if m.grade(&grading) < 0 {
                *pre = &*pre * &m.neg();
                nums.push(m.inverse()?);
            } else {
                nums.push(m);
            }
            Ok(())
        };
        let push_den = |m: Monomial, pre: &mut Monomial, dens: &mut Vec<Monomial>| -> Result<()> {
            if m.is_zero() {
                return Ok(());
            }
            let g = m.grade(&grading);
            if g == 0 {
                return Err(Error::NonTerminating {
                    monomial: alloc::string::ToString::to_string(&m),
                    grade: 0,
                });
            }
            if g < 0 {
                let inv = m.inverse()?;
                *pre = &*pre * &inv.neg();
                dens.push(inv);
            } else {
                dens.push(m);
            }
            Ok(())
        };

        for f in &self.factors {
            match f {
                Factor::OneMinus(m) => push_num(m.clone(), &mut pre, &mut nums)?,
                Factor::InvOneMinus(m) => push_den(m.clone(), &mut pre, &mut dens)?,
                Factor::Poly { coeffs, base } => {
                    let deg = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
                    if base.grade(&grading) < 0 {
                        pre = &pre * &base.pow(deg as i64)?;
                        let mut rev: Vec<BigInt> = coeffs[..=deg].to_vec();
                        rev.reverse();
                        polys.push((rev, base.inverse()?));
                    } else {
                        polys.push((coeffs[..=deg].to_vec(), base.clone()));
                    }
                }
                Factor::Pochhammer { a, step, len, inverse } => match len {
                    Length::Finite(_) => {
                        for m in pochhammer_factors(a, step, *len, &grading)? {
                            if *inverse {
                                push_den(m, &mut pre, &mut dens)?;
                            } else {
                                push_num(m, &mut pre, &mut nums)?;
                            }
                        }
                    }
                    Length::Unbounded => unbounded.push((a, step, *inverse)),
                },
            }
        }

        let g = pre.grade(&grading);
        if grading.is_bounded() && g > grading.max_grade() {
            return Ok(GradedSeries::zero(grading));
        }
        let inner = if grading.is_bounded() {
            grading.with_bound((grading.max_grade() - g).max(0) as u64)
        } else {
            grading
        };
        for (a, step, inverse) in unbounded {
            for m in pochhammer_factors(a, step, Length::Unbounded, &inner)? {
                if inverse {
                    dens.push(m);
                } else {
                    nums.push(m);
                }
            }
        }

        let mut s = GradedSeries::one(inner);
        for (coeffs, base) in &polys {
            s = s.mul(&poly_in(coeffs, base, inner)?)?;
        }
        for m in &nums {
            s = s.mul_one_minus(m)?;
        }
        for m in &dens {
            s = s.div_one_minus(m)?;
        }
        s.scale_into(&pre, grading)
    }
}

/// Sum of several products at a common grading.
pub fn eval_sum(products: &[Product], grading: Grading) -> Result<GradedSeries> {
    let mut acc = GradedSeries::zero(grading);
    for p in products {
        acc = acc.add(&p.eval(grading)?)?;
    }
    Ok(acc)
}
