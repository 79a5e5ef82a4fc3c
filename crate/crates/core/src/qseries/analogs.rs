use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{GradedSeries, Grading, Monomial};
use crate::{Error, Result};

/// Number of factors in a Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(usize),
    /// Only factors whose grade is within the bound are formed.
    Unbounded,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{}", n),
            Length::Unbounded => f.write_str("inf"),
        }
    }
}

/// `1/(1 - m) = sum_j m^j` truncated at the bound.
pub fn geom_inverse(m: &Monomial, grading: Grading) -> Result<GradedSeries> {
    GradedSeries::one(grading).div_one_minus(m)
}

/// The factor monomials `a * step^i` of `(a; step)_n`, stopping at the bound
/// for unbounded length.
pub(crate) fn pochhammer_factors(
    a: &Monomial,
    step: &Monomial,
    len: Length,
    grading: &Grading,
) -> Result<Vec<Monomial>> {
    match len {
        Length::Finite(n) => {
            let mut out = Vec::with_capacity(n);
            let mut cur = a.clone();
            for i in 0..n {
                if i > 0 {
                    cur = &cur * step;
                }
                out.push(cur.clone());
            }
            Ok(out)
        }
        Length::Unbounded => {
            let ga = a.grade(grading);
            let gs = step.grade(grading);
            if ga < 1 || gs < 1 || !grading.is_bounded() {
                return Err(Error::NonTerminating {
                    monomial: format!("({}; {})_inf", a, step),
                    grade: ga.min(gs),
                });
            }
            let mut out = Vec::new();
            let mut cur = a.clone();
            while cur.grade(grading) <= grading.max_grade() {
                out.push(cur.clone());
                cur = &cur * step;
            }
            Ok(out)
        }
    }
}

/// `(a; step)_n = prod_{i<n} (1 - a*step^i)`.
///
/// Every factor monomial must have nonnegative grade.
pub fn pochhammer(a: &Monomial, step: &Monomial, len: Length, grading: Grading) -> Result<GradedSeries> {
    let mut s = GradedSeries::one(grading);
    for m in pochhammer_factors(a, step, len, &grading)? {
        s = s.mul_one_minus(&m)?;
    }
    Ok(s)
}

/// `1/(a; step)_n`; every factor monomial must have positive grade.
pub fn pochhammer_inverse(a: &Monomial, step: &Monomial, len: Length, grading: Grading) -> Result<GradedSeries> {
    let mut s = GradedSeries::one(grading);
    for m in pochhammer_factors(a, step, len, &grading)? {
        s = s.div_one_minus(&m)?;
    }
    Ok(s)
}

/// Multiplies the univariate polynomial `p` by `1 - t^i` in place.
fn mul_one_minus_power(p: &mut Vec<BigInt>, i: usize) {
    let old = p.len();
    p.resize(old + i, BigInt::zero());
    for j in (i..old + i).rev() {
        let c = p[j - i].clone();
        p[j] -= c;
    }
}

/// Divides `p` by `1 - t^i`, which must divide it exactly.
fn div_one_minus_power(p: &mut Vec<BigInt>, i: usize) {
    for j in i..p.len() {
        let c = p[j - i].clone();
        p[j] += c;
    }
    let keep = p.len() - i;
    debug_assert!(p[keep..].iter().all(Zero::is_zero), "inexact division by 1 - t^{}", i);
    p.truncate(keep);
}

/// Coefficients in `t` of the Gaussian polynomial `[n; m]_t`, lowest degree
/// first. Empty (the zero polynomial) when `m > n`.
pub fn gaussian_poly(n: usize, m: usize) -> Vec<BigInt> {
    if m > n {
        return Vec::new();
    }
    let m = m.min(n - m);
    let mut p = vec![BigInt::from(1)];
    for i in (n - m + 1)..=n {
        mul_one_minus_power(&mut p, i);
    }
    for i in 1..=m {
        div_one_minus_power(&mut p, i);
    }
    p
}

/// Coefficients in `t` of `(t;t)_n / prod_i (t;t)_{parts_i}`.
pub fn multinomial_poly(n: usize, parts: &[usize]) -> Result<Vec<BigInt>> {
    if parts.iter().sum::<usize>() != n {
        return Err(Error::MultinomialSum {
            n,
            parts: format!("{:?}", parts),
        });
    }
    let mut p = vec![BigInt::from(1)];
    for i in 1..=n {
        mul_one_minus_power(&mut p, i);
    }
    for &k in parts {
        for i in 1..=k {
            div_one_minus_power(&mut p, i);
        }
    }
    Ok(p)
}

/// Evaluates `sum_j coeffs[j] * base^j` as a series.
pub fn poly_in(coeffs: &[BigInt], base: &Monomial, grading: Grading) -> Result<GradedSeries> {
    let mut s = GradedSeries::zero(grading);
    let mut pow = Monomial::one();
    for (j, c) in coeffs.iter().enumerate() {
        if j > 0 {
            pow = &pow * base;
        }
        if !c.is_zero() {
            s.add_monomial(Monomial::new(c * &pow.coeff, pow.exps))?;
        }
    }
    Ok(s)
}

/// `[n; m]` in the monomial `base`; zero when `m > n`.
pub fn gaussian_binomial(n: usize, m: usize, base: &Monomial, grading: Grading) -> Result<GradedSeries> {
    poly_in(&gaussian_poly(n, m), base, grading)
}

/// The q-multinomial `[n; parts]` in the monomial `base`.
pub fn q_multinomial(n: usize, parts: &[usize], base: &Monomial, grading: Grading) -> Result<GradedSeries> {
    poly_in(&multinomial_poly(n, parts)?, base, grading)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::qseries::Var;

    fn q(e: i32) -> Monomial {
        Var::Q.pow(e)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn geom_examples() {
        let s = geom_inverse(&q(1), Grading::q(3)).unwrap();
        assert_eq!(s.to_string(), "1 + q + q^2 + q^3");
        let m = Monomial::from_pairs(1, &[(Var::U, 2), (Var::Q, 2)]);
        assert_eq!(geom_inverse(&m, Grading::q(5)).unwrap().to_string(), "1 + u^2*q^2 + u^4*q^4");
        let m = Monomial::from_pairs(1, &[(Var::X, 1), (Var::Y, 2)]);
        assert_eq!(geom_inverse(&m, Grading::xy(3)).unwrap().to_string(), "1 + x*y^2");
        assert!(geom_inverse(&Var::U.pow(1), Grading::q(3)).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let g = Grading::q(10);
        let s = pochhammer(&q(1).neg(), &q(1), Length::Finite(2), g).unwrap();
        assert_eq!(s.to_string(), "1 + q + q^2 + q^3");
        let s = pochhammer(&q(1), &q(2), Length::Finite(2), g).unwrap();
        assert_eq!(s.to_string(), "1 - q - q^3 + q^4");
        assert!(pochhammer(&q(1), &q(2), Length::Finite(0), g).unwrap().is_one());
        assert!(pochhammer(&q(1), &q(0), Length::Unbounded, g).is_err());
    }

    #[test]
    fn signed_step() {
        // (q^5; q^-2)_2 = (1 - q^5)(1 - q^3)
        let g = Grading::q(10);
        let s = pochhammer(&q(5), &q(-2), Length::Finite(2), g).unwrap();
        assert_eq!(s.to_string(), "1 - q^3 - q^5 + q^8");
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_poly(2, 1), ints(&[1, 1]));
        assert_eq!(gaussian_poly(4, 2), ints(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_poly(3, 0), ints(&[1]));
        assert!(gaussian_poly(2, 3).is_empty());
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial_poly(3, &[1, 1, 1]).unwrap(), ints(&[1, 2, 2, 1]));
        assert_eq!(multinomial_poly(5, &[5]).unwrap(), ints(&[1]));
        assert_eq!(multinomial_poly(4, &[2, 2]).unwrap(), gaussian_poly(4, 2));
        assert!(multinomial_poly(4, &[2, 1]).is_err());
    }
}
