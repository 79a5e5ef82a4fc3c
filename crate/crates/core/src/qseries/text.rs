//! Text forms: `-2*u^2*v*q^3`, `1 + q - x^-1*y`.

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;

use super::{Exps, GradedSeries, Grading, Monomial, Var};
use crate::{Error, Result};

fn perr(input: &str, what: &str) -> Error {
    Error::Parse(format!("{} in {:?}", what, input))
}

fn parse_int(s: &str, whole: &str) -> Result<i32> {
    let t = s.trim();
    let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
    t.trim().parse::<i32>().map_err(|_| perr(whole, "bad exponent"))
}

/// Parses a monomial such as `3`, `-q`, `2*u^2*v*q^3` or `x^-1*y`.
pub fn parse_monomial(input: &str) -> Result<Monomial> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr(input, "empty monomial"));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(&s)),
    };
    let mut coeff = BigInt::from(1);
    let mut exps = Exps::default();
    for (i, factor) in body.split('*').enumerate() {
        if factor.is_empty() {
            return Err(perr(input, "empty factor"));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            if i != 0 {
                return Err(perr(input, "coefficient must come first"));
            }
            coeff = factor.parse::<BigInt>().map_err(|_| perr(input, "bad coefficient"))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n, parse_int(e, input)?),
            None => (factor, 1),
        };
        let v = Var::from_name(name).ok_or_else(|| perr(input, "unknown variable"))?;
        exps.set(v, exps.get(v) + exp);
    }
    if neg {
        coeff = -coeff;
    }
    Ok(Monomial::new(coeff, exps))
}

/// Parses a sum of monomials and truncates it to `grading`.
pub fn parse_series(input: &str, grading: Grading) -> Result<GradedSeries> {
    let mut s = GradedSeries::zero(grading);
    let text = input.trim();
    if text.is_empty() {
        return Err(perr(input, "empty series"));
    }
    let bytes = text.as_bytes();
    let mut start = 0;
    let mut depth = 0i32;
    for i in 0..=bytes.len() {
        let split = i == bytes.len()
            || (depth == 0 && (bytes[i] == b'+' || bytes[i] == b'-') && i > start && {
                let prev = text[..i].trim_end();
                !prev.ends_with('^') && !prev.ends_with('*') && !prev.is_empty()
            });
        if i < bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                _ => {}
            }
        }
        if split {
            let term = text[start..i].trim();
            s.add_monomial(parse_monomial(term)?)?;
            start = i;
        }
    }
    Ok(s)
}

/// Variable part of an exponent vector, `1` when empty.
pub fn render_exps(exps: &Exps) -> String {
    let m = Monomial::new(1, *exps);
    m.to_string()
}

/// Parses an exponent vector written as a unit monomial, e.g. `u^2*q^3`.
pub fn parse_exps(input: &str) -> Result<Exps> {
    let m = parse_monomial(input)?;
    if m.coeff != BigInt::from(1) {
        return Err(perr(input, "exponent vector must not carry a coefficient"));
    }
    Ok(m.exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_round_trip() {
        for t in ["1", "-1", "q", "-q", "2*u^2*v*q^3", "x^-1*y", "-7*c^2"] {
            assert_eq!(parse_monomial(t).unwrap().to_string(), t);
        }
        assert_eq!(parse_monomial("x^(-2)").unwrap().to_string(), "x^-2");
        assert!(parse_monomial("w").is_err());
        assert!(parse_monomial("q*2").is_err());
    }

    #[test]
    fn series_round_trip() {
        let g = Grading::q(5);
        for t in ["1 + q + 2*q^2 + u^2*v*q^3", "-1 - v^-1*q + 3*q^5", "0"] {
            let s = parse_series(t, g).unwrap();
            assert_eq!(s.to_string(), t);
        }
        assert_eq!(parse_series("q^7 + 1", g).unwrap().to_string(), "1");
        assert_eq!(parse_series("1 + q - q", g).unwrap().to_string(), "1");
    }

    #[test]
    fn exps() {
        let e = parse_exps("u^2*q^3").unwrap();
        assert_eq!(render_exps(&e), "u^2*q^3");
        assert_eq!(render_exps(&Exps::default()), "1");
        assert!(parse_exps("2*q").is_err());
    }
}
