//! Standard bases of weighted-homogeneous binomial ideals under local orders.
//!
//! Every element handled here is a monomial or a binomial whose two terms
//! share one weight `sum a_i n_i`. A reduction step replaces the leading term
//! by an order-smaller monomial of the same weight, and a weight class holds
//! finitely many monomials, so plain top-reduction terminates without Mora's
//! ecart bookkeeping. Pair completion is then Buchberger's algorithm.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{check_nice, initial_form, monomials_of_degree, spoly, Binomial, Element, Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardBasis {
    pub generators: Vec<Element>,
    pub order: MonomialOrder,
    pub weights: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialFormIdeal {
    /// Monomials and balanced binomials, one per basis element.
    pub generators: Vec<Element>,
    pub source: StandardBasis,
}

/// One reduction step of `f` by `g`, where `LM(g)` divides `LM(f)`.
pub(crate) fn reduce_step(f: &Element, g: &Element, order: &MonomialOrder) -> Option<Element> {
    let u = f.leading(order).div(g.leading(order)).unwrap();
    let from_g = g.tail(order).map(|t| t.mul(&u));
    let from_f = f.tail(order).cloned();
    match (from_g, from_f) {
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

/// Top-reduces `f` against `basis` until its leading monomial is not
/// divisible by any basis leading monomial; `None` is zero.
pub fn reduce(f: &Element, basis: &[Element], order: &MonomialOrder) -> Option<Element> {
    let mut cur = f.clone().normalized(order);
    loop {
        let lm = cur.leading(order);
        let Some(g) = basis.iter().find(|g| g.leading(order).divides(lm)) else {
            return Some(cur);
        };
        cur = reduce_step(&cur, g, order)?;
    }
}

/// Like [`reduce`], also reporting the indices of the reducers used.
pub fn reduce_traced(
    f: &Element,
    basis: &[Element],
    order: &MonomialOrder,
) -> (Option<Element>, Vec<usize>) {
    let mut cur = f.clone().normalized(order);
    let mut trace = Vec::new();
    loop {
        let lm = cur.leading(order);
        let Some(i) = basis.iter().position(|g| g.leading(order).divides(lm)) else {
            return (Some(cur), trace);
        };
        trace.push(i);
        match reduce_step(&cur, &basis[i], order) {
            Some(next) => cur = next,
            None => return (None, trace),
        }
    }
}

/// Buchberger completion, minimalization and tail interreduction with no
/// precondition checks. Pairs are processed by increasing lcm weight (or
/// lcm degree when `weights` is `None`).
pub fn complete(gens: &[Element], order: &MonomialOrder, weights: Option<&[u64]>) -> Vec<Element> {
    let key = |m: &Monomial| -> u64 {
        match weights {
            Some(w) => m.weight(w),
            None => m.degree() as u64,
        }
    };
    let mut basis: Vec<Element> = Vec::new();
    let mut queue: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let push = |basis: &mut Vec<Element>, queue: &mut BinaryHeap<Reverse<(u64, usize, usize)>>, e: Element| {
        let k = basis.len();
        let lk = e.leading(order).clone();
        for (i, g) in basis.iter().enumerate() {
            let li = g.leading(order);
            if li.is_coprime(&lk) || (g.is_monomial() && e.is_monomial()) {
                continue;
            }
            queue.push(Reverse((key(&li.lcm(&lk)), i, k)));
        }
        basis.push(e);
    };
    for g in gens {
        if let Some(r) = reduce(g, &basis, order) {
            push(&mut basis, &mut queue, r);
        }
    }
    while let Some(Reverse((_, i, j))) = queue.pop() {
        let Some(s) = spoly(&basis[i], &basis[j], order) else {
            continue;
        };
        if let Some(r) = reduce(&s, &basis, order) {
            push(&mut basis, &mut queue, r);
        }
    }
    let minimal = minimalize(basis, order);
    interreduce_tails(minimal, order)
}

/// Drops elements whose leading monomial is divisible by another's; among
/// equal leading monomials the earliest element survives.
pub fn minimalize(basis: Vec<Element>, order: &MonomialOrder) -> Vec<Element> {
    let lms: Vec<Monomial> = basis.iter().map(|e| e.leading(order).clone()).collect();
    basis
        .into_iter()
        .enumerate()
        .filter(|(i, _)| {
            !lms.iter().enumerate().any(|(j, lj)| {
                j != *i && lj.divides(&lms[*i]) && (lj != &lms[*i] || j < *i)
            })
        })
        .map(|(_, e)| e)
        .collect()
}

fn interreduce_tails(basis: Vec<Element>, order: &MonomialOrder) -> Vec<Element> {
    let mut out = basis.clone();
    for k in 0..out.len() {
        let Element::Binomial(b) = out[k].clone() else {
            continue;
        };
        let lead = b.plus.clone();
        let mut tail = Some(b.minus.clone());
        while let Some(t) = tail.clone() {
            let Some(g) = out
                .iter()
                .enumerate()
                .find(|(j, g)| *j != k && g.leading(order).divides(&t))
                .map(|(_, g)| g.clone())
            else {
                break;
            };
            let u = t.div(g.leading(order)).unwrap();
            tail = g.tail(order).map(|gt| gt.mul(&u));
        }
        out[k] = match tail {
            None => Element::Monomial(lead),
            Some(t) => Element::Binomial(Binomial::new(lead, t)),
        };
    }
    out
}

impl StandardBasis {
    /// Minimal standard basis of the ideal generated by `gens`.
    ///
    /// Each generator must be homogeneous for `weights`; a local order must be
    /// nice in `x1` for these weights on the box spanned by the generators.
    pub fn compute(gens: &[Element], order: &MonomialOrder, weights: &[u64]) -> Result<Self> {
        for g in gens {
            if g.dim() != order.dim() {
                return Err(Error::DimensionMismatch {
                    expected: order.dim(),
                    found: g.dim(),
                });
            }
            if !g.is_weakly_balanced(weights)? {
                return Err(Error::PreconditionViolated(format!(
                    "{g} is not homogeneous for the weights"
                )));
            }
        }
        // with x1 compared first by revlex, a balanced pair whose second
        // monomial contains x1 is always ordered correctly
        let trivially_nice = order.perm.last() == Some(&0);
        if order.is_local() && order.dim() > 1 && !trivially_nice {
            let bound = gens.iter().map(Element::max_exponent).max().unwrap_or(1).max(1);
            if let Err(v) = check_nice(order, 0, bound, Some(weights)) {
                return Err(Error::OrderNotNice {
                    var: 1,
                    alpha: v.alpha.to_string(),
                    beta: v.beta.to_string(),
                });
            }
        }
        let generators = if gens.len() <= 1 {
            gens.iter().map(|g| g.clone().normalized(order)).collect()
        } else {
            complete(gens, order, Some(weights))
        };
        Ok(StandardBasis {
            generators,
            order: order.clone(),
            weights: weights.to_vec(),
        })
    }

    pub fn dim(&self) -> usize {
        self.order.dim()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading(&self.order).clone()).collect()
    }

    pub fn reduce(&self, f: &Element) -> Option<Element> {
        reduce(f, &self.generators, &self.order)
    }

    pub fn initial_form_ideal(&self) -> InitialFormIdeal {
        let mut generators: Vec<Element> = Vec::new();
        for g in &self.generators {
            let f = initial_form(g).normalized(&self.order);
            if !generators.contains(&f) {
                generators.push(f);
            }
        }
        InitialFormIdeal {
            generators,
            source: self.clone(),
        }
    }

    /// Every pairwise s-polynomial reduces to zero.
    pub fn is_closed(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| match spoly(&g[i], &g[j], &self.order) {
                None => true,
                Some(s) => self.reduce(&s).is_none(),
            })
        })
    }
}

impl InitialFormIdeal {
    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.source.order
    }

    pub fn weights(&self) -> &[u64] {
        &self.source.weights
    }

    /// A minimal generating set of `I*`, in basis order. The initial forms
    /// of a minimal standard basis can be redundant as generators of `I*`
    /// (for `<5,6,13,14>`, `x1^2 x4 = x2 (x1 x3) - x1 (x2 x3 - x1 x4)`), so
    /// each form is tested against the degree-`n` part of the ideal spanned
    /// by the forms kept before it.
    pub fn minimal_generators(&self) -> Vec<Element> {
        let mut by_degree: Vec<(u32, usize)> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.leading(self.order()).degree(), i))
            .collect();
        by_degree.sort();
        let mut kept: Vec<usize> = Vec::new();
        for &(n, i) in &by_degree {
            if !in_degree_span(&self.generators, &kept, &self.generators[i], n) {
                kept.push(i);
            }
        }
        kept.sort_unstable();
        kept.into_iter().map(|i| self.generators[i].clone()).collect()
    }

    /// Minimal number of generators of `I*`.
    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading(self.order()).clone())
            .collect()
    }

    /// Normal form of a monomial modulo `I*`: the standard monomial it is
    /// congruent to, or `None` when it lies in `I*`.
    pub fn normal_form(&self, m: &Monomial) -> Option<Monomial> {
        match reduce(&Element::Monomial(m.clone()), &self.generators, self.order())? {
            Element::Monomial(r) => Some(r),
            Element::Binomial(_) => unreachable!("reducing a monomial yields a monomial"),
        }
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.normal_form(m).is_none()
    }

    /// Not divisible by any leading monomial.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        let o = self.order();
        !self.generators.iter().any(|g| g.leading(o).divides(m))
    }

    /// Minimal generators of `I*`.
    pub fn render(&self) -> Vec<String> {
        self.minimal_generators().iter().map(Element::to_string).collect()
    }
}

/// Whether the homogeneous `g` of degree `n` lies in the degree-`n` part of
/// the ideal generated by `gens[kept]`.
///
/// Every vector involved is `e_a` or `e_a - e_b` over the monomial basis, so
/// the span is a graphic matroid with a ground vertex standing in for the
/// single entries: `e_a` is in the span when `a` reaches the ground, and
/// `e_a - e_b` when `a` and `b` are connected.
fn in_degree_span(gens: &[Element], kept: &[usize], g: &Element, n: u32) -> bool {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut parent: Vec<usize> = vec![0];
    const GROUND: usize = 0;
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut node = |m: &Monomial, parent: &mut Vec<usize>| -> usize {
        *index.entry(m.clone()).or_insert_with(|| {
            parent.push(parent.len());
            parent.len() - 1
        })
    };
    for &k in kept {
        let h = &gens[k];
        let Some(shift) = n.checked_sub(h.monomials()[0].degree()) else { continue };
        for u in monomials_of_degree(h.dim(), shift) {
            let (a, b) = match h.mul_monomial(&u) {
                Element::Monomial(m) => (node(&m, &mut parent), GROUND),
                Element::Binomial(bi) => (node(&bi.plus, &mut parent), node(&bi.minus, &mut parent)),
            };
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let (a, b) = match g {
        Element::Monomial(m) => (node(m, &mut parent), GROUND),
        Element::Binomial(bi) => (node(&bi.plus, &mut parent), node(&bi.minus, &mut parent)),
    };
    find(&mut parent, a) == find(&mut parent, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(p: &[u32], q: &[u32]) -> Element {
        Element::Binomial(Binomial::new(Monomial::new(p), Monomial::new(q)))
    }

    fn mono(p: &[u32]) -> Element {
        Element::Monomial(Monomial::new(p))
    }

    #[test]
    fn five_six_thirteen() {
        let o = MonomialOrder::default_for(3);
        let w = [5, 6, 13];
        let gens = vec![b(&[0, 2, 1], &[5, 0, 0]), b(&[0, 0, 2], &[4, 1, 0]), b(&[1, 0, 1], &[0, 3, 0])];
        let sb = StandardBasis::compute(&gens, &o, &w).unwrap();
        assert_eq!(
            sb.generators,
            vec![
                b(&[0, 2, 1], &[5, 0, 0]),
                b(&[0, 0, 2], &[4, 1, 0]),
                b(&[1, 0, 1], &[0, 3, 0]),
                b(&[0, 5, 0], &[6, 0, 0]),
            ]
        );
        assert!(sb.is_closed());
        let ifi = sb.initial_form_ideal();
        assert_eq!(
            ifi.generators,
            vec![mono(&[0, 2, 1]), mono(&[0, 0, 2]), mono(&[1, 0, 1]), mono(&[0, 5, 0])]
        );
        assert_eq!(ifi.mu(), 4);
    }

    #[test]
    fn single_generator_is_returned() {
        let o = MonomialOrder::default_for(2);
        let g = vec![b(&[3, 0], &[0, 2])];
        let sb = StandardBasis::compute(&g, &o, &[2, 3]).unwrap();
        assert_eq!(sb.generators, vec![b(&[0, 2], &[3, 0])]);
        assert_eq!(sb.initial_form_ideal().mu(), 1);
    }

    #[test]
    fn reduction() {
        let o = MonomialOrder::default_for(3);
        let f = b(&[1, 0, 1], &[0, 3, 0]);
        let x1f = f.mul_monomial(&Monomial::new(&[1, 0, 0]));
        assert_eq!(reduce(&x1f, std::slice::from_ref(&f), &o), None);
        let s = b(&[0, 5, 0], &[6, 0, 0]);
        let gens = vec![b(&[0, 2, 1], &[5, 0, 0]), b(&[0, 0, 2], &[4, 1, 0]), f];
        assert_eq!(reduce(&s, &gens, &o), Some(s));
    }

    #[test]
    fn rejects_inhomogeneous_and_non_nice() {
        let o = MonomialOrder::default_for(3);
        let bad = vec![b(&[1, 0, 0], &[0, 1, 0])];
        assert!(matches!(
            StandardBasis::compute(&bad, &o, &[5, 6, 13]),
            Err(Error::PreconditionViolated(_))
        ));
        // x2 compared first in the tie-break, so x1*x3 beats x2^2
        let weird = MonomialOrder::neg_deg_revlex(vec![0, 2, 1]).unwrap();
        let gens = vec![b(&[0, 2, 0], &[1, 0, 1])];
        assert!(matches!(
            StandardBasis::compute(&gens, &weird, &[4, 5, 6]),
            Err(Error::OrderNotNice { .. })
        ));
    }

    #[test]
    fn d3cm_case_c_adds_the_spoly() {
        // <11,14,21>: f1 = x2^3 - x3^2, f2 = x1^7 - x2^4 x3
        let o = MonomialOrder::default_for(3);
        let w = [11, 14, 21];
        let f1 = b(&[0, 3, 0], &[0, 0, 2]);
        let f2 = b(&[7, 0, 0], &[0, 4, 1]);
        let sb = StandardBasis::compute(&[f1.clone(), f2.clone()], &o, &w).unwrap();
        let f3 = spoly(&f1.clone().normalized(&o), &f2.clone().normalized(&o), &o).unwrap();
        assert_eq!(sb.generators.len(), 3);
        assert!(sb.generators.contains(&f3));
        assert!(sb.is_closed());
    }
}
