//! The tangent cone `gr_m(R) = k[x_1..x_d]/I*` of a semigroup ring.
//!
//! `I*` is generated by monomials and balanced binomials with a standard
//! basis of the same shape, so the normal form of a monomial is again a
//! monomial (or zero). Multiplication maps between graded pieces therefore
//! send basis vectors to basis vectors, and the linear algebra below only
//! has to find kernels of such maps.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::almost_monomial::{link_and_type, AlmostMonomialIdeal};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::polyring::{monomials_of_degree, Binomial, Element, Monomial, MonomialOrder, Polynomial};
use crate::semigroup::NumericalSemigroup;
use crate::standard_basis::{complete, InitialFormIdeal, StandardBasis};
use crate::toric::defining_ideal;

pub use crate::toric::{d3_cm_fastpath, d4_gorenstein_fastpath};

/// Initial form ideal of `G`'s defining ideal under `order` (the default
/// local order when `None`).
pub fn initial_form_ideal(g: &NumericalSemigroup, order: Option<MonomialOrder>) -> Result<InitialFormIdeal> {
    let ideal = defining_ideal(g);
    let order = order.unwrap_or_else(|| MonomialOrder::default_for(g.embedding_dimension()));
    let sb = StandardBasis::compute(&ideal.elements(), &order, g.generators())?;
    Ok(sb.initial_form_ideal())
}

/// Cohen-Macaulay iff `x_1` divides no leading monomial of `I*`.
pub fn is_cm(ifi: &InitialFormIdeal) -> bool {
    ifi.leading_monomials().iter().all(|m| m.exp(0) == 0)
}

/// `NF(m * p)` summed termwise.
fn normal_form_times(ifi: &InitialFormIdeal, m: &Monomial, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (t, c) in p.terms() {
        if let Some(r) = ifi.normal_form(&t.mul(m)) {
            out.add_term(r, c.clone());
        }
    }
    out
}

/// Standard monomials of degree `n`.
pub fn standard_monomials(ifi: &InitialFormIdeal, n: u32) -> Vec<Monomial> {
    standard_in_degree(ifi, &box_monomials(ifi), n)
}

/// Every standard monomial is `x_1^k u` with `u` in the box.
fn standard_in_degree(ifi: &InitialFormIdeal, boxed: &BTreeSet<Monomial>, n: u32) -> Vec<Monomial> {
    boxed
        .iter()
        .filter(|u| u.degree() <= n)
        .map(|u| u.with_exp(0, n - u.degree()))
        .filter(|m| ifi.is_standard(m))
        .collect()
}

/// Degree-`n` forms killed by `x_1^k`, as combinations of standard monomials.
fn killed_by_x1_power(ifi: &InitialFormIdeal, boxed: &BTreeSet<Monomial>, n: u32, k: u32) -> Vec<Polynomial> {
    let basis = standard_in_degree(ifi, boxed, n);
    let shift = Monomial::var_power(ifi.dim(), 0, k);
    let mut targets: BTreeMap<Monomial, usize> = BTreeMap::new();
    let columns: Vec<SparseVec> = basis
        .iter()
        .map(|u| match ifi.normal_form(&u.mul(&shift)) {
            None => SparseVec::new(),
            Some(t) => {
                let next = targets.len();
                linalg::unit(*targets.entry(t).or_insert(next))
            }
        })
        .collect();
    linalg::kernel(&columns)
        .into_iter()
        .map(|v| to_polynomial(&basis, &v))
        .collect()
}

fn to_polynomial(basis: &[Monomial], v: &SparseVec) -> Polynomial {
    let mut p = Polynomial::zero();
    for (&i, c) in v {
        p.add_term(basis[i].clone(), BigRational::from_integer(c.clone()));
    }
    p
}

/// Per-degree dimensions of `H^0_M(gr)` and a basis of it.
#[derive(Clone, Debug, PartialEq)]
pub struct H0 {
    pub by_degree: BTreeMap<u32, Vec<Polynomial>>,
}

impl H0 {
    pub fn len(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn basis(&self) -> Vec<Polynomial> {
        self.by_degree.values().flatten().cloned().collect()
    }

    fn dims(&self) -> BTreeMap<u32, usize> {
        self.by_degree.iter().map(|(&n, v)| (n, v.len())).collect()
    }
}

fn h0_up_to(ifi: &InitialFormIdeal, boxed: &BTreeSet<Monomial>, top: u32) -> H0 {
    let mut by_degree = BTreeMap::new();
    for n in 0..=top {
        let ker = killed_by_x1_power(ifi, boxed, n, top);
        if !ker.is_empty() {
            by_degree.insert(n, ker);
        }
    }
    H0 { by_degree }
}

/// `H^0_M(gr) = (I* : x_1^inf) / I*`, computed degree by degree; the degree
/// bound grows by `n_1` until the dimensions stop changing.
pub fn h0(ifi: &InitialFormIdeal) -> H0 {
    if is_cm(ifi) {
        return H0 {
            by_degree: BTreeMap::new(),
        };
    }
    let step = ifi.weights().first().copied().unwrap_or(1).max(1) as u32;
    let max_deg = ifi
        .generators
        .iter()
        .map(|g| g.leading(ifi.order()).degree())
        .max()
        .unwrap_or(0);
    let boxed = box_monomials(ifi);
    let mut top = max_deg + step;
    let mut cur = h0_up_to(ifi, &boxed, top);
    loop {
        top += step;
        let next = h0_up_to(ifi, &boxed, top);
        if next.dims() == cur.dims() {
            return next;
        }
        cur = next;
    }
}

/// A vector-space basis of `H^0_M(gr)`, reduced modulo `I*`.
pub fn h0_basis(ifi: &InitialFormIdeal) -> Vec<Polynomial> {
    h0(ifi).basis()
}

/// The basis elements when they are all monomials.
pub fn h0_monomials(ifi: &InitialFormIdeal) -> Option<Vec<Monomial>> {
    h0_basis(ifi)
        .iter()
        .map(|p| match p.terms().collect::<Vec<_>>().as_slice() {
            [(m, _)] => Some((*m).clone()),
            _ => None,
        })
        .collect()
}

/// Smallest `k` with `M^k H^0 = 0`.
pub fn buchsbaum_level(ifi: &InitialFormIdeal) -> usize {
    buchsbaum_level_of(ifi, &h0_basis(ifi))
}

fn buchsbaum_level_of(ifi: &InitialFormIdeal, basis: &[Polynomial]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let mut k = 1u32;
    loop {
        let ms = monomials_of_degree(ifi.dim(), k);
        if basis
            .iter()
            .all(|p| ms.iter().all(|m| normal_form_times(ifi, m, p).is_zero()))
        {
            return k as usize;
        }
        k += 1;
    }
}

/// `dim_k gr_n` as `dim S_n - rank I*_n`.
pub fn hilbert_function(ifi: &InitialFormIdeal, n: u32) -> usize {
    let d = ifi.dim();
    let all = monomials_of_degree(d, n);
    let index: BTreeMap<&Monomial, usize> = all.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in &ifi.generators {
        let gd = g.leading(ifi.order()).degree();
        if gd > n {
            continue;
        }
        let p = g.to_polynomial();
        for m in monomials_of_degree(d, n - gd) {
            let mut v = SparseVec::new();
            for (t, c) in p.terms() {
                v.insert(index[&t.mul(&m)], c.numer().clone());
            }
            rows.push(v);
        }
    }
    all.len() - linalg::rank(rows)
}

/// Number of standard monomials of degree `n`; agrees with
/// [`hilbert_function`] because the generators form a standard basis.
pub fn hilbert_function_by_count(ifi: &InitialFormIdeal, n: u32) -> usize {
    standard_monomials(ifi, n).len()
}

/// Cohen-Macaulay type of `k[y]/J` for an artinian ideal `J` given by
/// weighted-homogeneous monomials and binomials: the socle dimension.
pub fn socle_type(gens: &[Element], weights: &[u64]) -> Result<usize> {
    let d = weights.len();
    let order = MonomialOrder::neg_deg_revlex((0..d).rev().collect())?;
    let basis = complete(gens, &order, Some(weights));
    let nf = |m: &Monomial| -> Option<Monomial> {
        match crate::standard_basis::reduce(&Element::Monomial(m.clone()), &basis, &order)? {
            Element::Monomial(r) => Some(r),
            Element::Binomial(_) => unreachable!("reducing a monomial yields a monomial"),
        }
    };
    let standard = |m: &Monomial| !basis.iter().any(|g| g.leading(&order).divides(m));
    for v in 0..d {
        if !basis
            .iter()
            .any(|g| g.leading(&order).pure_power().map(|p| p.0) == Some(v))
        {
            return Err(Error::PreconditionViolated("quotient is not artinian".into()));
        }
    }
    let mut socle = 0;
    let mut n = 0;
    loop {
        let here: Vec<Monomial> = monomials_of_degree(d, n).into_iter().filter(|m| standard(m)).collect();
        if here.is_empty() {
            return Ok(socle);
        }
        let mut targets: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        let columns: Vec<SparseVec> = here
            .iter()
            .map(|u| {
                let mut col = SparseVec::new();
                for v in 0..d {
                    if let Some(t) = nf(&u.mul(&Monomial::var_power(d, v, 1))) {
                        let next = targets.len();
                        let i = *targets.entry((v, t)).or_insert(next);
                        col.insert(i, BigInt::from(1));
                    }
                }
                col
            })
            .collect();
        socle += linalg::kernel(&columns).len();
        n += 1;
    }
}

/// Image of the generators under `x_1 -> 0`, as elements in `d - 1`
/// variables; monomials containing `x_1` vanish.
fn reduce_mod_x1(ifi: &InitialFormIdeal) -> Vec<Element> {
    let drop = |m: &Monomial| m.remove_var(0);
    let mut out = Vec::new();
    for g in &ifi.generators {
        let image = match g {
            Element::Monomial(m) if m.exp(0) > 0 => None,
            Element::Monomial(m) => Some(Element::Monomial(drop(m))),
            Element::Binomial(b) => match (b.plus.exp(0) > 0, b.minus.exp(0) > 0) {
                (true, true) => None,
                (true, false) => Some(Element::Monomial(drop(&b.minus))),
                (false, true) => Some(Element::Monomial(drop(&b.plus))),
                (false, false) => Some(Element::Binomial(Binomial::new(drop(&b.plus), drop(&b.minus)))),
            },
        };
        if let Some(e) = image {
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

/// Minimal standard basis of `(I* + x_1) / x_1` in `x_2..x_d`.
pub fn artinian_reduction(ifi: &InitialFormIdeal) -> Vec<Element> {
    let w = &ifi.weights()[1..];
    let order = MonomialOrder::neg_deg_revlex((0..w.len()).rev().collect()).expect("valid permutation");
    complete(&reduce_mod_x1(ifi), &order, Some(w))
}

/// Reads a 3-variable artinian ideal as almost monomial: at most one
/// binomial, of the form `x_v^a - (monomial in the other two)`. Returns the
/// ideal in coordinates `(x_v, others...)`.
fn as_almost_monomial(gens: &[Element]) -> Option<AlmostMonomialIdeal> {
    let binomials: Vec<&Binomial> = gens.iter().filter_map(Element::as_binomial).collect();
    let monos = || gens.iter().filter_map(|e| match e {
        Element::Monomial(m) => Some(m.clone()),
        _ => None,
    });
    match binomials.as_slice() {
        [] => Some(AlmostMonomialIdeal::monomial(monos().collect())),
        [b] => {
            let (head, tail) = [(&b.plus, &b.minus), (&b.minus, &b.plus)]
                .into_iter()
                .find(|(h, t)| h.pure_power().is_some_and(|(v, _)| t.exp(v) == 0))?;
            let (x, a) = head.pure_power()?;
            let rest: Vec<usize> = (0..3).filter(|&v| v != x).collect();
            let perm = |m: &Monomial| Monomial::new(&[m.exp(x), m.exp(rest[0]), m.exp(rest[1])]);
            let t = perm(tail);
            AlmostMonomialIdeal::new(Some((a, t.exp(1), t.exp(2))), monos().map(|m| perm(&m)).collect()).ok()
        }
        _ => None,
    }
}

/// Gorenstein property of the tangent cone for `d <= 4`.
pub fn is_gorenstein(ifi: &InitialFormIdeal) -> Result<bool> {
    let d = ifi.dim();
    if d >= 5 {
        return Err(Error::DimensionUnsupported(d));
    }
    if !is_cm(ifi) {
        return Ok(false);
    }
    if d <= 2 {
        return Ok(true);
    }
    let image = artinian_reduction(ifi);
    if d == 3 {
        return Ok(image.len() == 2);
    }
    let linked = as_almost_monomial(&image)
        .filter(|l| l.binomial.is_none() || l.strict)
        .map(|l| link_and_type(&l));
    match linked {
        Some(Ok(t)) => Ok(t == 1),
        _ => Ok(socle_type(&image, &ifi.weights()[1..])? == 1),
    }
}

/// Cohen-Macaulay type of the artinian reduction `gr / x_1 gr` by the socle
/// (only meaningful when the tangent cone is Cohen-Macaulay).
pub fn artinian_type(ifi: &InitialFormIdeal) -> Result<usize> {
    if ifi.dim() == 1 {
        return Ok(1);
    }
    socle_type(&artinian_reduction(ifi), &ifi.weights()[1..])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentConeReport {
    pub mu_i: usize,
    pub mu_istar: usize,
    pub is_cm: bool,
    pub h0_length: usize,
    pub buchsbaum_level: usize,
    /// Absent for `d >= 5` unless `I*` is a complete intersection.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_gorenstein: Option<bool>,
    pub istar_generators: Vec<String>,
}

impl TangentConeReport {
    pub fn new(g: &NumericalSemigroup) -> Result<Self> {
        let ideal = defining_ideal(g);
        let order = MonomialOrder::default_for(g.embedding_dimension());
        let ifi = StandardBasis::compute(&ideal.elements(), &order, g.generators())?.initial_form_ideal();
        Self::from_parts(ideal.mu(), &ifi)
    }

    pub fn from_parts(mu_i: usize, ifi: &InitialFormIdeal) -> Result<Self> {
        let d = ifi.dim();
        let h = h0(ifi);
        let basis = h.basis();
        let is_cm = is_cm(ifi);
        let is_gorenstein = if d <= 4 {
            Some(is_gorenstein(ifi)?)
        } else if ifi.mu() + 1 == d {
            Some(is_cm)
        } else {
            None
        };
        Ok(TangentConeReport {
            mu_i,
            mu_istar: ifi.mu(),
            is_cm,
            h0_length: basis.len(),
            buchsbaum_level: buchsbaum_level_of(ifi, &basis),
            is_gorenstein,
            istar_generators: ifi.render(),
        })
    }

    /// The structural invariants every report satisfies.
    pub fn is_consistent(&self) -> bool {
        (self.is_cm == (self.h0_length == 0))
            && ((self.buchsbaum_level == 0) == self.is_cm)
            && (self.is_gorenstein != Some(true) || self.is_cm)
            && self.buchsbaum_level <= self.h0_length
    }
}

/// The `x_1`-free monomials outside `LM(I*)`: a finite set since
/// `x_2, ..., x_d` are nilpotent modulo `I*`.
pub fn box_monomials(ifi: &InitialFormIdeal) -> BTreeSet<Monomial> {
    let lms = ifi.leading_monomials();
    let d = ifi.dim();
    let mut out = BTreeSet::new();
    let mut frontier = vec![Monomial::one(d)];
    while let Some(m) = frontier.pop() {
        if lms.iter().any(|l| l.divides(&m)) || !out.insert(m.clone()) {
            continue;
        }
        for v in 1..d {
            frontier.push(m.mul(&Monomial::var_power(d, v, 1)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ifi(gens: &[u64]) -> InitialFormIdeal {
        initial_form_ideal(&NumericalSemigroup::new(gens).unwrap(), None).unwrap()
    }

    #[test]
    fn five_six_thirteen() {
        let i = ifi(&[5, 6, 13]);
        assert!(!is_cm(&i));
        assert_eq!(
            h0_monomials(&i).unwrap(),
            vec![Monomial::new(&[0, 0, 1]), Monomial::new(&[0, 1, 1])]
        );
        assert_eq!(buchsbaum_level(&i), 2);
        assert!(!is_gorenstein(&i).unwrap());
        for n in 0..=15 {
            assert_eq!(hilbert_function(&i, n), hilbert_function_by_count(&i, n));
        }
        assert_eq!(hilbert_function(&i, 0), 1);
        assert_eq!(hilbert_function(&i, 1), 3);
        assert_eq!(hilbert_function(&i, 15), 5);
    }

    #[test]
    fn gorenstein_examples() {
        for g in [&[8, 12, 14, 21][..], &[8, 10, 12, 15], &[30, 33, 44, 45]] {
            let i = ifi(g);
            assert!(is_cm(&i), "{g:?}");
            assert!(is_gorenstein(&i).unwrap(), "{g:?}");
            assert_eq!(artinian_type(&i).unwrap(), 1);
        }
        let i = ifi(&[11, 14, 21]);
        assert!(is_cm(&i));
        assert!(!is_gorenstein(&i).unwrap());
        assert_eq!(artinian_type(&i).unwrap(), 2);
    }

    #[test]
    fn not_cm_in_four_variables() {
        let i = ifi(&[9, 10, 11, 23]);
        assert!(!is_cm(&i));
        assert!(!h0_basis(&i).is_empty());
        let r = TangentConeReport::new(&NumericalSemigroup::new(&[9, 10, 11, 23]).unwrap()).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.is_gorenstein, Some(false));
    }

    #[test]
    fn small_cases() {
        let i = ifi(&[2, 3]);
        assert!(is_cm(&i));
        assert!(is_gorenstein(&i).unwrap());
        let r = TangentConeReport::new(&NumericalSemigroup::new(&[1]).unwrap()).unwrap();
        assert!(r.is_cm && r.is_gorenstein == Some(true));
        let five = ifi(&[6, 7, 8, 9, 10]);
        assert!(matches!(is_gorenstein(&five), Err(Error::DimensionUnsupported(5))));
    }
}
