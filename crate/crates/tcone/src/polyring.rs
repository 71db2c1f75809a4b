//! Monomials, binomials, rational polynomials and monomial orders.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 6]>;

/// Exponent vector `x^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial(Exponents::from_slice(exps))
    }

    pub fn one(d: usize) -> Self {
        Monomial(smallvec::smallvec![0; d])
    }

    /// `x_i^e` in `d` variables (0-based `i`).
    pub fn var_power(d: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(d);
        m.0[i] = e;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weight(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&a, &w)| a as u64 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e > 0`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut it = self.support();
        let i = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some((i, self.0[i]))
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }

    /// Drops variable `i`.
    pub fn remove_var(&self, i: usize) -> Monomial {
        let mut v = self.0.clone();
        v.remove(i);
        Monomial(v)
    }

    /// Renders with custom variable names; `1` for the unit monomial.
    pub fn render_with(&self, names: &[&str]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    names[i].to_string()
                } else {
                    format!("{}^{}", names[i], a)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dim()).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.render_with(&refs))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Ok(Monomial::new(&v))
    }
}

/// `plus - minus`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Self {
        debug_assert_ne!(plus, minus);
        Binomial { plus, minus }
    }

    pub fn dim(&self) -> usize {
        self.plus.dim()
    }

    pub fn is_weakly_balanced(&self, weights: &[u64]) -> Result<bool> {
        check_dim(weights.len(), self.dim())?;
        Ok(self.plus.weight(weights) == self.minus.weight(weights))
    }

    pub fn is_balanced(&self, weights: &[u64]) -> Result<bool> {
        Ok(self.is_weakly_balanced(weights)?
            && self.plus.degree() == self.minus.degree()
            && self.plus.is_coprime(&self.minus))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A nonzero element with coefficients in `{±1}`: a monomial or a binomial.
///
/// Signs are dropped: every stored element is scaled so that its leading
/// coefficient is `+1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Element {
    Monomial(Monomial),
    Binomial(Binomial),
}

impl Element {
    pub fn dim(&self) -> usize {
        match self {
            Element::Monomial(m) => m.dim(),
            Element::Binomial(b) => b.dim(),
        }
    }

    pub fn leading(&self, order: &MonomialOrder) -> &Monomial {
        match self {
            Element::Monomial(m) => m,
            Element::Binomial(b) => {
                if order.compare(&b.plus, &b.minus) == Ordering::Less {
                    &b.minus
                } else {
                    &b.plus
                }
            }
        }
    }

    pub fn tail(&self, order: &MonomialOrder) -> Option<&Monomial> {
        match self {
            Element::Monomial(_) => None,
            Element::Binomial(b) => {
                if order.compare(&b.plus, &b.minus) == Ordering::Less {
                    Some(&b.plus)
                } else {
                    Some(&b.minus)
                }
            }
        }
    }

    /// Puts the leading term on the `plus` side.
    pub fn normalized(self, order: &MonomialOrder) -> Element {
        match self {
            Element::Binomial(b) if order.compare(&b.plus, &b.minus) == Ordering::Less => {
                Element::Binomial(Binomial::new(b.minus, b.plus))
            }
            e => e,
        }
    }

    /// `m * self`.
    pub fn mul_monomial(&self, m: &Monomial) -> Element {
        match self {
            Element::Monomial(a) => Element::Monomial(a.mul(m)),
            Element::Binomial(b) => Element::Binomial(Binomial::new(b.plus.mul(m), b.minus.mul(m))),
        }
    }

    pub fn monomials(&self) -> Vec<&Monomial> {
        match self {
            Element::Monomial(m) => vec![m],
            Element::Binomial(b) => vec![&b.plus, &b.minus],
        }
    }

    pub fn is_monomial(&self) -> bool {
        matches!(self, Element::Monomial(_))
    }

    pub fn as_binomial(&self) -> Option<&Binomial> {
        match self {
            Element::Binomial(b) => Some(b),
            Element::Monomial(_) => None,
        }
    }

    /// Monomials are trivially homogeneous; binomials need equal weights.
    pub fn is_weakly_balanced(&self, weights: &[u64]) -> Result<bool> {
        match self {
            Element::Monomial(m) => check_dim(weights.len(), m.dim()).map(|_| true),
            Element::Binomial(b) => b.is_weakly_balanced(weights),
        }
    }

    pub fn max_exponent(&self) -> u32 {
        self.monomials()
            .iter()
            .flat_map(|m| m.exponents().iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        match self {
            Element::Monomial(m) => Polynomial::monomial(m.clone(), BigRational::one()),
            Element::Binomial(b) => {
                let mut p = Polynomial::monomial(b.plus.clone(), BigRational::one());
                p.add_term(b.minus.clone(), -BigRational::one());
                p
            }
        }
    }

    pub fn render_with(&self, names: &[&str]) -> String {
        match self {
            Element::Monomial(m) => m.render_with(names),
            Element::Binomial(b) => {
                format!("{} - {}", b.plus.render_with(names), b.minus.render_with(names))
            }
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Monomial(m) => write!(f, "{m}"),
            Element::Binomial(b) => write!(f, "{b}"),
        }
    }
}

/// Lowest-degree homogeneous part of `e`.
pub fn initial_form(e: &Element) -> Element {
    match e {
        Element::Monomial(_) => e.clone(),
        Element::Binomial(b) => match b.plus.degree().cmp(&b.minus.degree()) {
            Ordering::Less => Element::Monomial(b.plus.clone()),
            Ordering::Greater => Element::Monomial(b.minus.clone()),
            Ordering::Equal => e.clone(),
        },
    }
}

/// `(lcm/LM(f)) f - (lcm/LM(g)) g`, sign-normalized; `None` for zero.
pub fn spoly(f: &Element, g: &Element, order: &MonomialOrder) -> Option<Element> {
    let lf = f.leading(order);
    let lg = g.leading(order);
    let l = lf.lcm(lg);
    let uf = l.div(lf).unwrap();
    let ug = l.div(lg).unwrap();
    // leading terms cancel; what is left is ug*tail(g) - uf*tail(f)
    let tf = f.tail(order).map(|t| t.mul(&uf));
    let tg = g.tail(order).map(|t| t.mul(&ug));
    match (tf, tg) {
        (None, None) => None,
        (Some(a), None) | (None, Some(a)) => Some(Element::Monomial(a)),
        (Some(a), Some(b)) => {
            if a == b {
                None
            } else {
                Some(Element::Binomial(Binomial::new(a, b)).normalized(order))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// Local: lower total degree is greater, ties broken reverse-lexicographically.
    NegDegRevLex,
    /// Global degree reverse lexicographic.
    DegRevLex,
    /// Global lexicographic.
    Lex,
}

/// A monomial order over variables listed in `perm` (0-based indices),
/// mirroring a ring declaration such as `k[x4,x3,x2,x1]`.
///
/// Reverse-lex ties look at the last variable of `perm` first, where the
/// smaller exponent wins; lex compares the first variable of `perm` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::Parse(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, perm })
    }

    pub fn neg_deg_revlex(perm: Vec<usize>) -> Result<Self> {
        Self::new(OrderKind::NegDegRevLex, perm)
    }

    /// `(x1,x2,x3)` for `d <= 3`, `(x_d,...,x_1)` for `d >= 4`.
    pub fn default_for(d: usize) -> Self {
        let perm = if d <= 3 {
            (0..d).collect()
        } else {
            (0..d).rev().collect()
        };
        MonomialOrder {
            kind: OrderKind::NegDegRevLex,
            perm,
        }
    }

    pub fn lex(perm: Vec<usize>) -> Result<Self> {
        Self::new(OrderKind::Lex, perm)
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn is_local(&self) -> bool {
        self.kind == OrderKind::NegDegRevLex
    }

    fn revlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.perm.iter().rev() {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::NegDegRevLex => b
                .degree()
                .cmp(&a.degree())
                .then_with(|| self.revlex(a, b)),
            OrderKind::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.revlex(a, b)),
            OrderKind::Lex => {
                for &v in &self.perm {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_dim(self.dim(), a.dim())?;
        check_dim(self.dim(), b.dim())?;
        Ok(self.compare(a, b))
    }

    /// Renders the permutation as `x4,x3,x2,x1`.
    pub fn render(&self) -> String {
        let names: Vec<String> = self.perm.iter().map(|v| format!("x{}", v + 1)).collect();
        names.join(",")
    }
}

/// A pair violating niceness: `alpha` should be greater than `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceViolation {
    pub alpha: Monomial,
    pub beta: Monomial,
}

/// Checks that `order` is nice in variable `var` on the box of exponents
/// `<= bound`.
///
/// Balanced pairs are those with equal degree, disjoint supports and, when
/// `weights` is given, equal weight. Without weights the `(x1,x2,x3)` order
/// already fails on `x2` against `x1`, so pass the semigroup weights for the
/// orders actually used on toric ideals.
pub fn check_nice(
    order: &MonomialOrder,
    var: usize,
    bound: u32,
    weights: Option<&[u64]>,
) -> std::result::Result<(), NiceViolation> {
    check_nice_after(order, var, bound, weights, &[])
}

/// Like [`check_nice`], restricted to monomials free of the `eliminated`
/// variables. Chaining `var = 0` then `var = 1` with `eliminated = [0]`
/// expresses "nice in x1, then nice in x2".
pub fn check_nice_after(
    order: &MonomialOrder,
    var: usize,
    bound: u32,
    weights: Option<&[u64]>,
    eliminated: &[usize],
) -> std::result::Result<(), NiceViolation> {
    let d = order.dim();
    let mut all = Vec::new();
    let mut cur = vec![0u32; d];
    loop {
        all.push(Monomial::new(&cur));
        let mut k = 0;
        loop {
            if k == d {
                return finish_nice(order, var, weights, all);
            }
            if eliminated.contains(&k) || cur[k] == bound {
                cur[k] = 0;
                k += 1;
            } else {
                cur[k] += 1;
                break;
            }
        }
    }
}

fn finish_nice(
    order: &MonomialOrder,
    var: usize,
    weights: Option<&[u64]>,
    all: Vec<Monomial>,
) -> std::result::Result<(), NiceViolation> {
    let mut by_degree: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for m in all {
        by_degree.entry(m.degree()).or_default().push(m);
    }
    // degree clause: every monomial of degree p beats every one of degree p+1
    let extremes: Vec<(u32, Monomial, Monomial)> = by_degree
        .iter()
        .map(|(&p, ms)| {
            let lo = ms.iter().min_by(|a, b| order.compare(a, b)).unwrap().clone();
            let hi = ms.iter().max_by(|a, b| order.compare(a, b)).unwrap().clone();
            (p, lo, hi)
        })
        .collect();
    for w in extremes.windows(2) {
        let (_, lo, _) = &w[0];
        let (_, _, hi) = &w[1];
        if order.compare(lo, hi) != Ordering::Greater {
            return Err(NiceViolation {
                alpha: lo.clone(),
                beta: hi.clone(),
            });
        }
    }
    // balanced clause
    for ms in by_degree.values() {
        let mut groups: HashMap<u64, Vec<&Monomial>> = HashMap::new();
        for m in ms {
            let key = weights.map_or(0, |w| m.weight(w));
            groups.entry(key).or_default().push(m);
        }
        for g in groups.values() {
            for beta in g.iter().filter(|b| b.exp(var) > 0) {
                for alpha in g.iter() {
                    if alpha.is_coprime(beta) && order.compare(alpha, beta) != Ordering::Greater {
                        return Err(NiceViolation {
                            alpha: (*alpha).clone(),
                            beta: (*beta).clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Sparse polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_int(m: Monomial, c: i64) -> Self {
        Polynomial::monomial(m, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                p.add_term(a.mul(b), x * y);
            }
        }
        p
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<&Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| order.compare(a, b))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Lowest-degree homogeneous part.
    pub fn initial_form(&self) -> Result<Polynomial> {
        let low = self
            .terms
            .keys()
            .map(Monomial::degree)
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == low)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Converts back to a `±1` element (sign dropped) when possible.
    pub fn to_element(&self, order: &MonomialOrder) -> Option<Element> {
        let one = BigRational::one();
        match self.terms.len() {
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (c.abs() == one).then(|| Element::Monomial(m.clone()))
            }
            2 => {
                let mut it = self.terms.iter();
                let (a, ca) = it.next().unwrap();
                let (b, cb) = it.next().unwrap();
                if ca.abs() != one || (ca + cb) != BigRational::zero() {
                    return None;
                }
                Some(Element::Binomial(Binomial::new(a.clone(), b.clone())).normalized(order))
            }
            _ => None,
        }
    }

    /// The polynomial multiplied by `±1` so its `order`-leading coefficient is positive.
    pub fn sign_normalized(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_monomial(order) {
            Ok(m) if self.terms[m].is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if a.is_one() {
                write!(f, "{m}")?;
            } else if m.is_one() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `n` in `d` variables.
pub fn monomials_of_degree(d: usize, n: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    fn rec(i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = rest;
            out.push(Monomial::new(cur));
            return;
        }
        for a in 0..=rest {
            cur[i] = a;
            rec(i + 1, rest - a, cur, out);
        }
        cur[i] = 0;
    }
    if d == 0 {
        if n == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    fn b(p: &[u32], q: &[u32]) -> Element {
        Element::Binomial(Binomial::new(m(p), m(q)))
    }

    #[test]
    fn compare_local() {
        let o3 = MonomialOrder::default_for(3);
        // x2^3 vs x1*x3^2 with equal degree
        assert_eq!(o3.compare(&m(&[0, 3, 0]), &m(&[1, 0, 2])), Ordering::Greater);
        assert_eq!(o3.compare(&m(&[1, 0, 0]), &m(&[2, 0, 0])), Ordering::Greater);
        assert_eq!(o3.compare(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ordering::Equal);
        let o4 = MonomialOrder::default_for(4);
        assert_eq!(o4.compare(&m(&[0, 5, 0, 0]), &m(&[4, 0, 0, 1])), Ordering::Greater);
        assert_eq!(o4.compare(&m(&[0, 2, 0, 0]), &m(&[1, 0, 1, 0])), Ordering::Greater);
        assert!(o4.try_compare(&m(&[1, 0]), &m(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn leading_monomials() {
        let o = MonomialOrder::default_for(3);
        assert_eq!(b(&[0, 3, 0], &[1, 0, 1]).leading(&o), &m(&[1, 0, 1]));
        assert_eq!(b(&[0, 0, 2], &[4, 1, 0]).leading(&o), &m(&[0, 0, 2]));
        assert_eq!(b(&[1, 0, 2], &[0, 3, 0]).leading(&o), &m(&[0, 3, 0]));
        let p = Polynomial::zero();
        assert_eq!(p.leading_monomial(&o), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn initial_forms() {
        assert_eq!(
            initial_form(&b(&[0, 2, 1], &[5, 0, 0])),
            Element::Monomial(m(&[0, 2, 1]))
        );
        let bal = b(&[0, 2, 0, 0], &[1, 0, 1, 0]);
        assert_eq!(initial_form(&bal), bal);
        let mono = Element::Monomial(m(&[1, 1, 0]));
        assert_eq!(initial_form(&mono), mono);
    }

    #[test]
    fn spolys() {
        let o = MonomialOrder::default_for(3);
        let f = b(&[1, 0, 1], &[0, 3, 0]);
        assert_eq!(spoly(&f, &f, &o), None);
        let g = b(&[0, 2, 1], &[5, 0, 0]);
        assert_eq!(spoly(&f, &g, &o), Some(b(&[0, 5, 0], &[6, 0, 0])));
        // d3cm(c) shape with exponents (a2,a3,a1,a12,a13) = (3,2,7,4,1)
        let f1 = b(&[0, 3, 0], &[0, 0, 2]).normalized(&o);
        let f2 = b(&[7, 0, 0], &[0, 4, 1]).normalized(&o);
        let s = spoly(&f1, &f2, &o).unwrap();
        let expect = b(&[0, 7, 0], &[7, 0, 1]).normalized(&o);
        assert_eq!(s, expect);
        let mono = Element::Monomial(m(&[1, 1, 0]));
        assert_eq!(spoly(&mono, &Element::Monomial(m(&[0, 1, 1])), &o), None);
    }

    #[test]
    fn balance_flags() {
        let w = [8, 10, 12, 15];
        let x = Binomial::new(m(&[0, 2, 0, 0]), m(&[1, 0, 1, 0]));
        assert!(x.is_balanced(&w).unwrap());
        let y = Binomial::new(m(&[0, 2, 1]), m(&[5, 0, 0]));
        assert!(y.is_weakly_balanced(&[5, 6, 13]).unwrap());
        assert!(!y.is_balanced(&[5, 6, 13]).unwrap());
        let z = Binomial::new(m(&[1, 0]), m(&[0, 1]));
        assert!(!z.is_weakly_balanced(&[2, 3]).unwrap());
        assert!(z.is_weakly_balanced(&[2, 3, 4]).is_err());
    }

    #[test]
    fn niceness() {
        let o3 = MonomialOrder::default_for(3);
        assert!(check_nice(&o3, 0, 6, Some(&[5, 6, 13])).is_ok());
        let v = check_nice(&o3, 0, 6, None).unwrap_err();
        assert_eq!(order_pair(&v), (m(&[0, 1, 0]), m(&[1, 0, 0])));
        let w = [8, 10, 12, 15];
        assert!(check_nice_after(&MonomialOrder::default_for(4), 1, 5, Some(&w), &[]).is_err());
        assert!(check_nice_after(&MonomialOrder::default_for(4), 1, 5, Some(&w), &[0]).is_ok());
        let o4 = MonomialOrder::default_for(4);
        assert!(check_nice(&o4, 0, 5, None).is_ok());
        assert!(check_nice_after(&o4, 1, 5, None, &[0]).is_ok());
        let lex = MonomialOrder::lex(vec![0, 1, 2]).unwrap();
        assert!(check_nice(&lex, 0, 3, None).is_err());
    }

    fn order_pair(v: &NiceViolation) -> (Monomial, Monomial) {
        (v.alpha.clone(), v.beta.clone())
    }

    #[test]
    fn rendering() {
        assert_eq!(m(&[1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(m(&[0, 0]).to_string(), "1");
        assert_eq!(b(&[0, 5, 0], &[6, 0, 0]).to_string(), "x2^5 - x1^6");
        let p = Polynomial::from_int(m(&[1, 0]), 2).sub(&Polynomial::from_int(m(&[0, 1]), 1));
        assert_eq!(p.to_string(), "2*x1 - x2");
    }

    #[test]
    fn degree_lists() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 0), vec![Monomial::one(4)]);
    }
}
