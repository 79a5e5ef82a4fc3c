//! Each closed form as a list of symbolic products in the identity
//! variables. Arguments are applied afterwards by substitution.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{BuildOptions, ClosedForm, Fin3Length, FormId, Mutation};
use crate::qseries::{Length, Monomial, Product, Var};
use crate::{Error, Result};

fn mono(pairs: &[(Var, i32)]) -> Monomial {
    Monomial::from_pairs(1, pairs)
}

fn neg(pairs: &[(Var, i32)]) -> Monomial {
    Monomial::from_pairs(-1, pairs)
}

fn fin(n: u32) -> Length {
    Length::Finite(n as usize)
}

fn domain(msg: alloc::string::String) -> Error {
    Error::Domain(msg)
}

fn i32_of(n: u64) -> i32 {
    n as i32
}

fn binom2(m: u32) -> i32 {
    i32_of(u64::from(m) * u64::from(m + 1) / 2)
}

/// `[top; m]` with the convention `[-1; 0] = 1`; otherwise zero when
/// `top < m` or `top < 0`.
fn gaussian_or_empty(p: Product, top: i64, m: u32, base: Monomial) -> Option<Product> {
    if top < 0 {
        return (m == 0).then_some(p);
    }
    if (top as u64) < u64::from(m) {
        return None;
    }
    Some(p.gaussian(top as usize, m as usize, base))
}

/// Multiplicities `m_0, ..., m_top` of a partition padded to `n` parts.
fn multiplicities(mu: &[u32], n: u32) -> Vec<usize> {
    let top = mu.iter().copied().max().unwrap_or(0) as usize;
    let mut m = vec![0usize; top + 1];
    for &x in mu {
        m[x as usize] += 1;
    }
    m[0] += n as usize - mu.len();
    m
}

/// Degree of the q-multinomial with these parts, `sum_{i<j} m_i m_j`.
fn multinomial_degree(m: &[usize]) -> i64 {
    let total: usize = m.iter().sum();
    let sq: usize = m.iter().map(|x| x * x).sum();
    ((total * total - sq) / 2) as i64
}

fn check_partition(mu: &[u32], len: u32, what: &str) -> Result<()> {
    if mu.len() > len as usize {
        return Err(domain(format!("{} has more than {} parts", what, len)));
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(domain(format!("{} is not a partition", what)));
    }
    Ok(())
}

/// `(uv)^k q^{C(k+1,2)} [n;k]_q (-(u/v)q^{n-k+1};q)_k / (u^2 q^{2n-k+1};q)_k`
fn tlh_uvq_bar(n: u32, k: u32, opts: &BuildOptions) -> Product {
    let (n_, k_) = (n as i32, k as i32);
    let tri = if opts.mutation == Some(Mutation::DropTriangularPrefactor) {
        0
    } else {
        binom2(k)
    };
    Product::new(mono(&[(Var::U, k_), (Var::V, k_), (Var::Q, tri)]))
        .gaussian(n as usize, k as usize, Var::Q.into())
        .poch(neg(&[(Var::U, 1), (Var::V, -1), (Var::Q, n_ - k_ + 1)]), Var::Q.into(), fin(k))
        .over_poch(mono(&[(Var::U, 2), (Var::Q, 2 * n_ - k_ + 1)]), Var::Q.into(), fin(k))
}

/// `(x^{f+1} y^f)^c [n-c; f]_{xy} / ((x;xy)_c (x^n y^{n-1}; (xy)^-1)_f)`
fn tlh_xy_bar(n: u32, k: u32) -> Product {
    let (c, f) = (k.div_ceil(2), k / 2);
    let (ci, fi, ni) = (c as i32, f as i32, n as i32);
    let xy = mono(&[(Var::X, 1), (Var::Y, 1)]);
    Product::new(mono(&[(Var::X, (fi + 1) * ci), (Var::Y, fi * ci)]))
        .gaussian((n - c) as usize, f as usize, xy.clone())
        .over_poch(Var::X.into(), xy, fin(c))
        .over_poch(mono(&[(Var::X, ni), (Var::Y, ni - 1)]), mono(&[(Var::X, -1), (Var::Y, -1)]), fin(f))
}

/// `(q^{2n-1}; q^-2)_len` in the denominator.
fn over_top_odd(p: Product, n: u32, len: u32) -> Product {
    p.over_poch(Var::Q.pow(2 * n as i32 - 1), Var::Q.pow(-2), fin(len))
}

pub(super) fn products(cf: &ClosedForm, opts: &BuildOptions) -> Result<Vec<Product>> {
    let p = &cf.params;
    let q = || Monomial::from(Var::Q);
    let q2 = || Var::Q.pow(2);
    Ok(match cf.id {
        FormId::LhpQ => {
            let n = p.need_n(cf.id)?;
            vec![Product::default().over_poch(q(), q2(), fin(n))]
        }
        FormId::LhpXy => {
            let n = p.need_n(cf.id)? as i32;
            let mut pr = Product::default();
            for i in 1..=n {
                pr = pr.over_one_minus(mono(&[(Var::X, i), (Var::Y, i - 1)]));
            }
            vec![pr]
        }
        FormId::LhpUvq | FormId::AlhUvq => {
            let n = p.need_n(cf.id)?;
            let shift = if cf.id == FormId::LhpUvq { n as i32 + 1 } else { 2 };
            vec![Product::default()
                .poch(neg(&[(Var::U, 1), (Var::V, 1), (Var::Q, 1)]), q(), fin(n))
                .over_poch(mono(&[(Var::U, 2), (Var::Q, shift)]), q(), fin(n))]
        }
        FormId::TlhUvq => {
            let (n, k) = p.need_nk(cf.id)?;
            (0..=k).map(|m| tlh_uvq_bar(n, m, opts)).collect()
        }
        FormId::TlhUvqBar => {
            let (n, k) = p.need_nk(cf.id)?;
            vec![tlh_uvq_bar(n, k, opts)]
        }
        FormId::TalhUvq => {
            let (n, k) = p.need_nk(cf.id)?;
            let s = (n - k + 1) as i32;
            vec![Product::default()
                .gaussian(n as usize, k as usize, q())
                .poch(neg(&[(Var::U, 1), (Var::V, 1), (Var::Q, s)]), q(), fin(k))
                .over_poch(mono(&[(Var::U, 2), (Var::Q, 2 * s)]), q(), fin(k))]
        }
        FormId::TlhXy => {
            let (n, k) = p.need_nk(cf.id)?;
            (0..=k).map(|m| tlh_xy_bar(n, m)).collect()
        }
        FormId::TlhXyBar => {
            let (n, k) = p.need_nk(cf.id)?;
            vec![tlh_xy_bar(n, k)]
        }
        FormId::TalhXy => {
            let (n, k) = (p.need_n(cf.id)?, p.need_k(cf.id)?);
            if n + 1 < k {
                return Err(domain(format!("talh_xy needs n >= k-1, got n={} k={}", n, k)));
            }
            let (c, f) = (k.div_ceil(2), k / 2);
            let s = n as i32 - k as i32;
            let xy = mono(&[(Var::X, 1), (Var::Y, 1)]);
            vec![Product::default()
                .gaussian(n as usize, f as usize, xy.clone())
                .over_poch(Var::X.into(), xy.clone(), fin(c))
                .over_poch(mono(&[(Var::X, s + 1), (Var::Y, s + 2)]), xy, fin(f))]
        }
        FormId::RNk => {
            let (n, k) = p.need_nk(cf.id)?;
            let (c, f) = (k.div_ceil(2), k / 2);
            let mut out = Vec::new();
            for i in 0..=f {
                let pr = Product::new(Var::Q.pow(i32_of(u64::from(i) * u64::from(2 * c + 1))));
                let top = i64::from(n) - i64::from(k) - 1 + i64::from(i);
                if let Some(pr) = gaussian_or_empty(pr, top, i, q2()) {
                    out.push(over_top_odd(pr.over_poch(q(), q2(), fin(c)), n, f));
                }
            }
            out
        }
        FormId::RExactT => {
            let (t, j) = (p.need("t", cf.id)?, p.need("j", cf.id)?);
            let pre = Product::new(Var::Q.pow(i32_of(u64::from(t) * u64::from(2 * j + 1))));
            match p.l {
                None => vec![pre.over_poch(q(), q2(), fin(j)).over_poch(q2(), q2(), fin(t))],
                Some(l) => {
                    let n = p.need_n(cf.id)?;
                    if !(j <= l && l <= n) {
                        return Err(domain(format!("r_exact_t needs j <= l <= n, got j={} l={} n={}", j, l, n)));
                    }
                    let top = i64::from(l) - i64::from(j) - 1 + i64::from(t);
                    match gaussian_or_empty(pre, top, t, q2()) {
                        Some(pr) => vec![over_top_odd(pr.over_poch(q(), q2(), fin(j)), n, n - l)],
                        None => vec![],
                    }
                }
            }
        }
        FormId::LbarNkQ => {
            let (n, k) = p.need_nk(cf.id)?;
            let (c, f) = (k.div_ceil(2), k / 2);
            let pr = Product::new(Var::Q.pow(binom2(k)))
                .gaussian((n - c) as usize, f as usize, q2())
                .over_poch(q(), q2(), fin(c));
            vec![over_top_odd(pr, n, f)]
        }
        FormId::LMu => {
            let n = p.need_n(cf.id)?;
            let mu = p.need_mu(cf.id)?;
            check_partition(mu, n, "mu")?;
            let m = multiplicities(mu, n);
            let e: i64 = mu.iter().enumerate().map(|(i, &x)| (i64::from(n) - i as i64) * i64::from(x)).sum();
            let pre = Var::Q.pow((e - multinomial_degree(&m)) as i32);
            vec![Product::new(pre).multinomial(n as usize, &m, q())?]
        }
        FormId::AMu => {
            let n = p.need_n(cf.id)?;
            let mu = p.need_mu(cf.id)?;
            check_partition(mu, n, "mu")?;
            let m = multiplicities(mu, n);
            let e: i64 = mu.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * i64::from(x)).sum();
            vec![Product::new(Var::Q.pow(e as i32)).multinomial(n as usize, &m, q())?]
        }
        FormId::AMuK => {
            let (n, k) = p.need_nk(cf.id)?;
            let mu = p.need_mu(cf.id)?;
            check_partition(mu, k, "mu")?;
            let m = multiplicities(mu, k);
            let w: i64 = mu.iter().map(|&x| i64::from(x)).sum();
            let e: i64 = mu.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * i64::from(x)).sum();
            let pre = Var::Q.pow((e + i64::from(n - k) * w) as i32);
            vec![Product::new(pre)
                .gaussian(n as usize, k as usize, q())
                .multinomial(k as usize, &m, q())?]
        }
        FormId::Fin3Rhs => {
            let k = p.need_k(cf.id)?;
            let ki = k as i32;
            let len = match opts.fin3_length {
                Fin3Length::K => fin(k),
                Fin3Length::Unbounded => Length::Unbounded,
            };
            vec![Product::new(mono(&[(Var::Z, ki), (Var::Q, ki * (2 * ki - 1))]))
                .over_poch(mono(&[(Var::Z, 1), (Var::Q, 1)]), q2(), len)
                .over_poch(q2(), q2(), fin(k))]
        }
    })
}
