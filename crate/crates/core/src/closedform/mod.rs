//! Closed-form generating functions, assembled symbolically and expanded
//! only at the end, after their monomial arguments are substituted.

mod forms;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::enumerate::{parse_parts, render_parts};
use crate::qseries::{eval_sum, parse_monomial, GradedSeries, Grading, Product, Subst, Var};
use crate::{Error, Result};

/// Names of the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormId {
    /// `1/(q;q^2)_n`
    LhpQ,
    /// `prod_{i=1}^n 1/(1 - x^i y^{i-1})`
    LhpXy,
    /// `(-uvq;q)_n / (u^2 q^{n+1};q)_n`
    LhpUvq,
    /// `(-uvq;q)_n / (u^2 q^2;q)_n`
    AlhUvq,
    /// Sum of `TlhUvqBar` over `m <= k`.
    TlhUvq,
    /// `(uv)^k q^{C(k+1,2)} [n;k]_q (-(u/v)q^{n-k+1};q)_k / (u^2 q^{2n-k+1};q)_k`
    TlhUvqBar,
    /// `[n;k]_q (-uvq^{n-k+1};q)_k / (u^2 q^{2(n-k+1)};q)_k`
    TalhUvq,
    /// Sum of `TlhXyBar` over `m <= k`.
    TlhXy,
    /// `(x^{f+1}y^f)^c [n-c;f]_{xy} / ((x;xy)_c (x^n y^{n-1};(xy)^-1)_f)`
    /// with `c = ceil(k/2)`, `f = floor(k/2)`.
    TlhXyBar,
    /// `[n;f]_{xy} / ((x;xy)_c (x^{n-k+1} y^{n-k+2};xy)_f)`
    TalhXy,
    /// `sum_{i<=f} q^{i(2c+1)} [n-k-1+i;i]_{q^2} / ((q;q^2)_c (q^{2n-1};q^-2)_f)`
    RNk,
    /// `q^{t(2j+1)} [l-j-1+t;t]_{q^2} / ((q;q^2)_j (q^{2n-1};q^-2)_{n-l})`,
    /// or `q^{t(2j+1)} / ((q;q^2)_j (q^2;q^2)_t)` for unbounded `l`.
    RExactT,
    /// `q^{C(k+1,2)} [n-c;f]_{q^2} / ((q;q^2)_c (q^{2n-1};q^-2)_f)`
    LbarNkQ,
    /// Weight generating function of `lambda` in `L_n` with `ceil(lambda) = mu`.
    LMu,
    /// Weight generating function of `lambda` in `A_n` with `floor(lambda) = mu`.
    AMu,
    /// Weight generating function of `lambda` in `A_{n,k}` with
    /// `floor(lambda) = mu`.
    AMuK,
    /// `z^k q^{k(2k-1)} / ((zq;q^2)_len (q^2;q^2)_k)`
    Fin3Rhs,
}

impl FormId {
    pub const ALL: [FormId; 17] = [
        FormId::LhpQ,
        FormId::LhpXy,
        FormId::LhpUvq,
        FormId::AlhUvq,
        FormId::TlhUvq,
        FormId::TlhUvqBar,
        FormId::TalhUvq,
        FormId::TlhXy,
        FormId::TlhXyBar,
        FormId::TalhXy,
        FormId::RNk,
        FormId::RExactT,
        FormId::LbarNkQ,
        FormId::LMu,
        FormId::AMu,
        FormId::AMuK,
        FormId::Fin3Rhs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormId::LhpQ => "lhp_q",
            FormId::LhpXy => "lhp_xy",
            FormId::LhpUvq => "lhp_uvq",
            FormId::AlhUvq => "alh_uvq",
            FormId::TlhUvq => "tlh_uvq",
            FormId::TlhUvqBar => "tlh_uvq_bar",
            FormId::TalhUvq => "talh_uvq",
            FormId::TlhXy => "tlh_xy",
            FormId::TlhXyBar => "tlh_xy_bar",
            FormId::TalhXy => "talh_xy",
            FormId::RNk => "r_nk",
            FormId::RExactT => "r_exact_t",
            FormId::LbarNkQ => "lbar_nk_q",
            FormId::LMu => "l_mu",
            FormId::AMu => "a_mu",
            FormId::AMuK => "a_mu_k",
            FormId::Fin3Rhs => "fin3_rhs",
        }
    }

    /// Case-insensitive lookup by name.
    pub fn from_name(s: &str) -> Option<FormId> {
        FormId::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }

    /// Parameter keys the form reads, in display order.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            FormId::LhpQ | FormId::LhpXy | FormId::LhpUvq | FormId::AlhUvq => &["n"],
            FormId::TlhUvq
            | FormId::TlhUvqBar
            | FormId::TalhUvq
            | FormId::TlhXy
            | FormId::TlhXyBar
            | FormId::TalhXy
            | FormId::RNk
            | FormId::LbarNkQ => &["n", "k"],
            FormId::RExactT => &["n", "t", "j", "l"],
            FormId::LMu | FormId::AMu => &["n", "mu"],
            FormId::AMuK => &["n", "k", "mu"],
            FormId::Fin3Rhs => &["k"],
        }
    }
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer parameters of a closed form. Unused fields are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub t: Option<u32>,
    pub j: Option<u32>,
    /// `None` is the unbounded case.
    pub l: Option<u32>,
    pub mu: Option<Vec<u32>>,
}

impl Params {
    pub fn n(n: u32) -> Params {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn nk(n: u32, k: u32) -> Params {
        Params {
            n: Some(n),
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn k(k: u32) -> Params {
        Params {
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn with_mu(mut self, mu: Vec<u32>) -> Params {
        self.mu = Some(mu);
        self
    }

    pub(crate) fn need(&self, key: &str, id: FormId) -> Result<u32> {
        let v = match key {
            "n" => self.n,
            "k" => self.k,
            "t" => self.t,
            "j" => self.j,
            _ => None,
        };
        v.ok_or_else(|| Error::Domain(format!("{} needs parameter {}", id, key)))
    }

    pub(crate) fn need_n(&self, id: FormId) -> Result<u32> {
        self.need("n", id)
    }

    pub(crate) fn need_k(&self, id: FormId) -> Result<u32> {
        self.need("k", id)
    }

    /// `(n, k)` with `n >= k`.
    pub(crate) fn need_nk(&self, id: FormId) -> Result<(u32, u32)> {
        let (n, k) = (self.need_n(id)?, self.need_k(id)?);
        if n < k {
            return Err(Error::Domain(format!("{} needs n >= k, got n={} k={}", id, n, k)));
        }
        Ok((n, k))
    }

    pub(crate) fn need_mu(&self, id: FormId) -> Result<&[u32]> {
        self.mu
            .as_deref()
            .ok_or_else(|| Error::Domain(format!("{} needs parameter mu", id)))
    }

    /// Sets one parameter from text; `l` accepts `inf`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = || Error::Parse(format!("bad value {:?} for {}", value, key));
        let int = || value.trim().parse::<u32>().map_err(|_| bad());
        match key {
            "n" => self.n = Some(int()?),
            "k" | "m" => self.k = Some(int()?),
            "t" => self.t = Some(int()?),
            "j" => self.j = Some(int()?),
            "l" => self.l = if value.trim() == "inf" { None } else { Some(int()?) },
            "mu" => self.mu = Some(parse_parts(value)?),
            _ => return Err(Error::Parse(format!("unknown parameter {:?}", key))),
        }
        Ok(())
    }
}

/// Which length to use for the first Pochhammer symbol of `fin3_rhs`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fin3Length {
    /// `(zq;q^2)_k`; agrees with the distinct-parts enumeration.
    #[default]
    K,
    /// `(zq;q^2)_inf`
    Unbounded,
}

/// A deliberate perturbation used to test that checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Omits `q^{C(m+1,2)}` from every term of `tlh_uvq` and `tlh_uvq_bar`.
    DropTriangularPrefactor,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    pub fin3_length: Fin3Length,
    pub mutation: Option<Mutation>,
}

/// A closed form with its parameters and monomial arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub id: FormId,
    pub params: Params,
    /// Images of the formal variables; identity by default.
    pub args: Subst,
}

impl ClosedForm {
    pub fn new(id: FormId, params: Params) -> ClosedForm {
        ClosedForm {
            id,
            params,
            args: Subst::identity(),
        }
    }

    pub fn with_args(mut self, args: Subst) -> ClosedForm {
        self.args = args;
        self
    }

    /// Sets the image of one variable.
    pub fn arg(mut self, v: Var, m: crate::qseries::Monomial) -> ClosedForm {
        self.args.set(v, m);
        self
    }

    /// The symbolic products, after argument substitution, whose sum is the
    /// closed form.
    pub fn products(&self, opts: &BuildOptions) -> Result<Vec<Product>> {
        forms::products(self, opts)?
            .iter()
            .map(|p| p.substitute(&self.args))
            .collect()
    }
}

/// Expands a closed form to the grading bound.
pub fn build(spec: &ClosedForm, grading: Grading) -> Result<GradedSeries> {
    build_with(spec, grading, &BuildOptions::default())
}

pub fn build_with(spec: &ClosedForm, grading: Grading, opts: &BuildOptions) -> Result<GradedSeries> {
    eval_sum(&spec.products(opts)?, grading)
}

/// Splits on commas outside parentheses.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().map(str::trim).filter(|t| !t.is_empty()).collect()
}

/// Parses `x->x^2*y, y->x^-1`.
pub fn parse_subst(input: &str) -> Result<Subst> {
    let mut s = Subst::identity();
    for item in split_top(input) {
        let (v, m) = item
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("expected var->monomial, got {:?}", item)))?;
        let var = Var::from_name(v.trim()).ok_or_else(|| Error::Parse(format!("unknown variable {:?}", v)))?;
        s.set(var, parse_monomial(m)?);
    }
    Ok(s)
}

/// Parses `tlh_xy_bar(n=3,k=2; x->x^2*y, y->x^-1)` or `l_mu(n=2,mu=(2,1))`.
pub fn parse_closed_form(input: &str) -> Result<ClosedForm> {
    let s = input.trim();
    let bad = || Error::Parse(format!("expected name(params; args), got {:?}", input));
    let (name, rest) = s.split_once('(').ok_or_else(bad)?;
    let body = rest.strip_suffix(')').ok_or_else(bad)?;
    let id = FormId::from_name(name.trim()).ok_or_else(|| Error::Parse(format!("unknown closed form {:?}", name)))?;
    let (params_text, args_text) = body.split_once(';').unwrap_or((body, ""));
    let mut params = Params::default();
    for kv in split_top(params_text) {
        let (k, v) = kv.split_once('=').ok_or_else(bad)?;
        params.set(k.trim(), v)?;
    }
    Ok(ClosedForm::new(id, params).with_args(parse_subst(args_text)?))
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        let mut items: Vec<String> = Vec::new();
        for key in self.id.keys() {
            let v = match *key {
                "n" => p.n.map(|x| format!("{}", x)),
                "k" => p.k.map(|x| format!("{}", x)),
                "t" => p.t.map(|x| format!("{}", x)),
                "j" => p.j.map(|x| format!("{}", x)),
                "l" => Some(p.l.map_or_else(|| String::from("inf"), |x| format!("{}", x))),
                "mu" => p.mu.as_deref().map(render_parts),
                _ => None,
            };
            if let Some(v) = v {
                items.push(format!("{}={}", key, v));
            }
        }
        write!(f, "{}({}", self.id, items.join(","))?;
        if !self.args.is_identity() {
            write!(f, "; {}", self.args)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests;
