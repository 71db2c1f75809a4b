//! Text formats accepted on the command line and in reports.
//!
//! Generators: integers separated by whitespace or commas, optionally in
//! angle brackets (`<5,6,13>`). Orders: a permutation of variables such as
//! `x4,x3,x2,x1` or `4 3 2 1`. Elements: `x2^2*x3 - x1^5`, the format
//! produced by `Display`.

use crate::error::{Error, Result};
use crate::polyring::{Binomial, Element, Monomial, MonomialOrder};
use crate::semigroup::NumericalSemigroup;

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_generators(s: &str) -> Result<Vec<u64>> {
    let body = s.trim();
    let body = body
        .strip_prefix('<')
        .and_then(|b| b.strip_suffix('>'))
        .unwrap_or(body);
    let gens = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|e| err(format!("generator {t:?}: {e}"))))
        .collect::<Result<Vec<u64>>>()?;
    if gens.is_empty() {
        return Err(Error::Empty);
    }
    Ok(gens)
}

pub fn parse_semigroup(s: &str) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(&parse_generators(s)?)
}

fn parse_var(t: &str, d: usize) -> Result<usize> {
    let digits = t.strip_prefix('x').unwrap_or(t);
    let i: usize = digits
        .parse()
        .map_err(|_| err(format!("bad variable {t:?}")))?;
    if i == 0 || i > d {
        return Err(err(format!("variable {t:?} outside x1..x{d}")));
    }
    Ok(i - 1)
}

/// A negative-degree reverse-lex order over `d` variables.
pub fn parse_order(s: &str, d: usize) -> Result<MonomialOrder> {
    let perm = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_var(t, d))
        .collect::<Result<Vec<usize>>>()?;
    if perm.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: perm.len(),
        });
    }
    MonomialOrder::neg_deg_revlex(perm)
}

pub fn parse_monomial(s: &str, d: usize) -> Result<Monomial> {
    let s = s.trim();
    let mut exps = vec![0u32; d];
    if s == "1" {
        return Ok(Monomial::new(&exps));
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let (var, e) = match factor.split_once('^') {
            Some((v, e)) => (
                v.trim(),
                e.trim().parse::<u32>().map_err(|_| err(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        let i = parse_var(var, d)?;
        exps[i] = exps[i]
            .checked_add(e)
            .ok_or_else(|| err(format!("exponent overflow in {s:?}")))?;
    }
    Ok(Monomial::new(&exps))
}

/// A monomial or `m1 - m2` with distinct sides.
pub fn parse_element(s: &str, d: usize) -> Result<Element> {
    let parts: Vec<&str> = s.split('-').collect();
    match parts.as_slice() {
        [m] => Ok(Element::Monomial(parse_monomial(m, d)?)),
        [p, q] => {
            let (p, q) = (parse_monomial(p, d)?, parse_monomial(q, d)?);
            if p == q {
                return Err(err(format!("{s:?} is zero")));
            }
            Ok(Element::Binomial(Binomial::new(p, q)))
        }
        _ => Err(err(format!("{s:?} has more than two terms"))),
    }
}
