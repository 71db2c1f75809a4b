//! The defining ideal of `k[[t^{n_1}, ..., t^{n_d}]]` and its structure in
//! embedding dimensions 3 and 4.
//!
//! Minimal generators come from Betti elements: values `b` whose
//! factorizations split into several classes when two factorizations are
//! joined whenever they share a variable. Each extra class contributes one
//! binomial.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{Binomial, Element, Monomial, MonomialOrder};
use crate::semigroup::{Factorization, NumericalSemigroup};

#[derive(Clone, Debug)]
pub struct DefiningIdeal {
    /// Oriented so that `plus` leads under the default local order.
    pub generators: Vec<Binomial>,
    /// Weight of each generator (its Betti element).
    pub degrees: Vec<u64>,
    pub semigroup: NumericalSemigroup,
}

impl DefiningIdeal {
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self) -> usize {
        self.semigroup.embedding_dimension()
    }

    pub fn elements(&self) -> Vec<Element> {
        self.generators.iter().cloned().map(Element::Binomial).collect()
    }

    pub fn render(&self) -> Vec<String> {
        self.generators.iter().map(Binomial::to_string).collect()
    }

    /// Is the ideal a complete intersection (`mu = d - 1`).
    pub fn is_complete_intersection(&self) -> bool {
        self.mu() + 1 == self.dim()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Factorization classes of `b` under "shares a variable".
pub fn factorization_classes(g: &NumericalSemigroup, b: u64) -> Vec<Vec<Factorization>> {
    let facts = g.factorizations(b as i64);
    let d = g.embedding_dimension();
    let mut uf = UnionFind::new(facts.len());
    for v in 0..d {
        let mut first = None;
        for (k, f) in facts.iter().enumerate() {
            if f.coefficients[v] > 0 {
                match first {
                    None => first = Some(k),
                    Some(r) => uf.union(r, k),
                }
            }
        }
    }
    let mut classes: Vec<(usize, Vec<Factorization>)> = Vec::new();
    for (k, f) in facts.into_iter().enumerate() {
        let r = uf.find(k);
        match classes.iter_mut().find(|(root, _)| *root == r) {
            Some((_, c)) => c.push(f),
            None => classes.push((r, vec![f])),
        }
    }
    classes.into_iter().map(|(_, c)| c).collect()
}

/// Preferred factorization of a class: fewest variables, then longest,
/// then lexicographically largest exponent vector.
fn representative(class: &[Factorization]) -> &Factorization {
    class
        .iter()
        .min_by(|a, b| {
            let sa = a.support().count();
            let sb = b.support().count();
            sa.cmp(&sb)
                .then(b.length.cmp(&a.length))
                .then(b.coefficients.cmp(&a.coefficients))
        })
        .unwrap()
}

fn rep_key(f: &Factorization) -> (usize, std::cmp::Reverse<u32>, std::cmp::Reverse<Vec<u32>>) {
    (
        f.support().count(),
        std::cmp::Reverse(f.length),
        std::cmp::Reverse(f.coefficients.clone()),
    )
}

/// Values that can be Betti elements. If `b` is one and `b - n_1` lies in
/// `G`, the classes avoiding `x_1` use some `x_j` with `b - n_1 - n_j`
/// outside `G` (else a factorization using both would join them), so
/// `b - n_1` is in `Ap(G, n_j)`.
fn betti_candidates(g: &NumericalSemigroup) -> Vec<u64> {
    let gens = g.generators();
    let mut out: Vec<u64> = g.apery_multiplicity().elements.clone();
    for &nj in &gens[1..] {
        let ap = g.apery(nj).expect("generator is a member");
        out.extend(ap.elements.iter().map(|w| w + gens[0]));
    }
    out.sort_unstable();
    out.dedup();
    out.retain(|&b| {
        b > 0
            && gens
                .iter()
                .filter(|&&n| b >= n && g.contains((b - n) as i64))
                .count()
                >= 2
    });
    out
}

/// Minimal binomial generators of the defining ideal, by increasing weight.
pub fn defining_ideal(g: &NumericalSemigroup) -> DefiningIdeal {
    let d = g.embedding_dimension();
    let order = MonomialOrder::default_for(d);
    let mut generators = Vec::new();
    let mut degrees = Vec::new();
    for b in betti_candidates(g) {
        let classes = factorization_classes(g, b);
        if classes.len() < 2 {
            continue;
        }
        let mut reps: Vec<&Factorization> = classes.iter().map(|c| representative(c)).collect();
        reps.sort_by_key(|f| rep_key(f));
        let base = Monomial::new(&reps[0].coefficients);
        for r in &reps[1..] {
            let other = Monomial::new(&r.coefficients);
            let e = Element::Binomial(Binomial::new(base.clone(), other)).normalized(&order);
            if let Element::Binomial(bin) = e {
                generators.push(bin);
                degrees.push(b);
            }
        }
    }
    DefiningIdeal {
        generators,
        degrees,
        semigroup: g.clone(),
    }
}

/// `(exponent, other side)` when one side of `b` is a pure power of `x_i`.
fn pure_side(b: &Binomial, i: usize) -> Option<(u32, &Monomial)> {
    match (b.plus.pure_power(), b.minus.pure_power()) {
        (Some((v, e)), _) if v == i => Some((e, &b.minus)),
        (_, Some((v, e))) if v == i => Some((e, &b.plus)),
        _ => None,
    }
}

fn supported_in(m: &Monomial, vars: &[usize]) -> bool {
    !m.is_one() && m.support().all(|v| vars.contains(&v))
}

/// Both sides pure powers of `x_i` and `x_j`: their exponents.
fn pure_pair(b: &Binomial, i: usize, j: usize) -> Option<(u32, u32)> {
    let (ei, other) = pure_side(b, i)?;
    match other.pure_power() {
        Some((v, ej)) if v == j => Some((ei, ej)),
        _ => None,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Structure of the defining ideal of a 3-generated semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum HerzogClass {
    /// `(x_i^{a_i} - x_j^{a_j}, x_k^{a_k} - x_i^{r_ki} x_j^{r_kj})`; indices 0-based.
    Symmetric {
        perm: [usize; 3],
        alpha_i: u32,
        alpha_j: u32,
        alpha_k: u32,
        r_ki: u32,
        r_kj: u32,
    },
    /// `x_i^{alpha_i} - x_j^{alpha_ij} x_k^{alpha_ik}` for each `i`;
    /// `alpha_ij[i][j]` is the exponent of `x_j` in the generator for `x_i`.
    NonSymmetric {
        alpha: [u32; 3],
        alpha_ij: [[u32; 3]; 3],
    },
}

impl HerzogClass {
    /// Frobenius number implied by the structure.
    pub fn predicted_frobenius(&self, gens: &[u64]) -> Option<i64> {
        match self {
            HerzogClass::Symmetric {
                perm: [i, j, k],
                alpha_i,
                alpha_k,
                ..
            } => Some(
                (*alpha_i as i64 - 1) * gens[*i] as i64 + (*alpha_k as i64 - 1) * gens[*k] as i64
                    - gens[*j] as i64,
            ),
            HerzogClass::NonSymmetric { .. } => None,
        }
    }
}

pub fn herzog_classify(ideal: &DefiningIdeal) -> Result<HerzogClass> {
    if ideal.dim() != 3 {
        return Err(Error::DimensionUnsupported(ideal.dim()));
    }
    let gens = &ideal.generators;
    match gens.len() {
        2 => {
            for p in permutations(3) {
                let (i, j, k) = (p[0], p[1], p[2]);
                if i > j {
                    continue;
                }
                for (a, b) in [(0, 1), (1, 0)] {
                    let Some((alpha_i, alpha_j)) = pure_pair(&gens[a], i, j) else {
                        continue;
                    };
                    let Some((alpha_k, tail)) = pure_side(&gens[b], k) else {
                        continue;
                    };
                    if !supported_in(tail, &[i, j]) {
                        continue;
                    }
                    return Ok(HerzogClass::Symmetric {
                        perm: [i, j, k],
                        alpha_i,
                        alpha_j,
                        alpha_k,
                        r_ki: tail.exp(i),
                        r_kj: tail.exp(j),
                    });
                }
            }
            Err(Error::StructureMismatch(format!(
                "two generators not of complete intersection shape: {}",
                ideal.render().join(", ")
            )))
        }
        3 => {
            let mut alpha = [0u32; 3];
            let mut alpha_ij = [[0u32; 3]; 3];
            for i in 0..3 {
                let others: Vec<usize> = (0..3).filter(|&v| v != i).collect();
                let hit = gens.iter().find_map(|b| {
                    let (e, tail) = pure_side(b, i)?;
                    others.iter().all(|&v| tail.exp(v) > 0).then_some((e, tail))
                });
                let Some((e, tail)) = hit else {
                    return Err(Error::StructureMismatch(format!(
                        "no generator x{}^a - (other two variables): {}",
                        i + 1,
                        ideal.render().join(", ")
                    )));
                };
                alpha[i] = e;
                for &v in &others {
                    alpha_ij[i][v] = tail.exp(v);
                }
            }
            for i in 0..3 {
                let sum: u32 = (0..3).filter(|&j| j != i).map(|j| alpha_ij[j][i]).sum();
                if sum != alpha[i] {
                    return Err(Error::StructureMismatch(format!(
                        "alpha_{} = {} but the tails give {}",
                        i + 1,
                        alpha[i],
                        sum
                    )));
                }
            }
            Ok(HerzogClass::NonSymmetric { alpha, alpha_ij })
        }
        n => Err(Error::StructureMismatch(format!("{n} minimal generators for d = 3"))),
    }
}

/// Arithmetic Cohen-Macaulay test for `d = 3` read off the ideal's shape.
/// `x2^a2 - x3^a3, x1^a1 - x2^r12 x3^r13`, reduced so that `r13 < a3`.
fn pure_pair_23(a2: u32, a3: u32, a1: u32, mut r12: u32, mut r13: u32) -> bool {
    while r13 >= a3 {
        r13 -= a3;
        r12 += a2;
    }
    a2 + r12 <= a1 + a3 - r13
}

pub fn d3_cm_fastpath(class: &HerzogClass) -> bool {
    match *class {
        HerzogClass::Symmetric {
            perm: [i, j, _],
            alpha_i,
            alpha_j,
            alpha_k,
            r_ki,
            r_kj,
        } => match (i, j) {
            (0, 1) => true,
            (0, 2) => {
                // x1^a1 - x3^a3, x2^a2 - x1^r21 x3^r23 with r23 < a3
                let (a1, a3) = (alpha_i, alpha_j);
                let (mut r21, mut r23) = (r_ki, r_kj);
                while r23 >= a3 {
                    r23 -= a3;
                    r21 += a1;
                }
                if r21 == 0 {
                    // x2^a2 - x3^r23 is a second pure relation; its initial
                    // form is x3^r23, so read the ideal with that pure pair
                    return pure_pair_23(alpha_k, r23, a1, 0, a3);
                }
                alpha_k <= r21 + r23
            }
            _ => pure_pair_23(alpha_i, alpha_j, alpha_k, r_ki, r_kj),
        },
        HerzogClass::NonSymmetric { alpha, alpha_ij } => alpha[1] <= alpha_ij[1][0] + alpha_ij[1][2],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairingSubcase {
    /// `{x1,x2}` and `{x3,x4}` pure pairs
    #[serde(rename = "i")]
    First,
    /// `{x1,x3}` and `{x2,x4}`
    #[serde(rename = "ii")]
    Second,
    /// `{x1,x4}` and `{x2,x3}`
    #[serde(rename = "iii")]
    Third,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TailSubcase {
    #[serde(rename = "1a")]
    OneA,
    #[serde(rename = "1b")]
    OneB,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "3a")]
    ThreeA,
    #[serde(rename = "3b")]
    ThreeB,
}

impl fmt::Display for TailSubcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TailSubcase::OneA => "1a",
            TailSubcase::OneB => "1b",
            TailSubcase::TwoA => "2a",
            TailSubcase::TwoB => "2b",
            TailSubcase::ThreeA => "3a",
            TailSubcase::ThreeB => "3b",
        };
        f.write_str(s)
    }
}

/// Structure of the defining ideal of a symmetric 4-generated semigroup.
/// Indices are 0-based; `alpha_ij[i][j]` is the exponent of `x_j` in the
/// generator headed by `x_i^{alpha_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum BresinskyClass {
    /// Two pure-power binomials in disjoint variable pairs plus one mixed
    /// binomial whose exponents are `beta`.
    CaseI {
        subcase: PairingSubcase,
        alpha: [u32; 4],
        beta: [u32; 4],
    },
    /// `x_i^a - x_j^b`, `x_h^c - x_i^. x_j^.`, `x_k^e - x_i^. x_j^. x_h^.`.
    CaseII {
        perm: [usize; 4],
        alpha: [u32; 4],
        alpha_ij: [[u32; 4]; 4],
    },
    /// Five generators: one `x_i^{alpha_i} - x_j x_k` per variable and one
    /// binomial between two variable pairs.
    CaseIII {
        subcase: TailSubcase,
        alpha: [u32; 4],
        alpha_ij: [[u32; 4]; 4],
        tails: [[usize; 2]; 4],
        fifth: Binomial,
    },
}

pub fn bresinsky_classify(ideal: &DefiningIdeal) -> Result<BresinskyClass> {
    if ideal.dim() != 4 {
        return Err(Error::DimensionUnsupported(ideal.dim()));
    }
    if !ideal.semigroup.is_symmetric() {
        return Err(Error::PreconditionViolated("semigroup is not symmetric".into()));
    }
    let gens = &ideal.generators;
    let mismatch = || {
        Error::StructureMismatch(format!(
            "{} generators fit no known shape: {}",
            gens.len(),
            ideal.render().join(", ")
        ))
    };
    match gens.len() {
        3 => classify_ci4(gens).ok_or_else(mismatch),
        5 => classify_five(gens).ok_or_else(mismatch),
        _ => Err(mismatch()),
    }
}

fn classify_ci4(gens: &[Binomial]) -> Option<BresinskyClass> {
    let pairings = [
        (PairingSubcase::First, [0, 1], [2, 3]),
        (PairingSubcase::Second, [0, 2], [1, 3]),
        (PairingSubcase::Third, [0, 3], [1, 2]),
    ];
    for (subcase, p, q) in pairings {
        for a in 0..3 {
            for b in 0..3 {
                if a == b {
                    continue;
                }
                let c = 3 - a - b;
                let Some((ap0, ap1)) = pure_pair(&gens[a], p[0], p[1]) else {
                    continue;
                };
                let Some((aq0, aq1)) = pure_pair(&gens[b], q[0], q[1]) else {
                    continue;
                };
                let mut alpha = [0; 4];
                alpha[p[0]] = ap0;
                alpha[p[1]] = ap1;
                alpha[q[0]] = aq0;
                alpha[q[1]] = aq1;
                let m = gens[c].plus.mul(&gens[c].minus);
                let beta = [m.exp(0), m.exp(1), m.exp(2), m.exp(3)];
                return Some(BresinskyClass::CaseI { subcase, alpha, beta });
            }
        }
    }
    for p in permutations(4) {
        let (i, j, h, k) = (p[0], p[1], p[2], p[3]);
        if i > j {
            continue;
        }
        for a in 0..3 {
            for b in 0..3 {
                if a == b {
                    continue;
                }
                let c = 3 - a - b;
                let Some((ai, aj)) = pure_pair(&gens[a], i, j) else {
                    continue;
                };
                let Some((ah, th)) = pure_side(&gens[b], h) else {
                    continue;
                };
                let Some((ak, tk)) = pure_side(&gens[c], k) else {
                    continue;
                };
                if !supported_in(th, &[i, j]) || !supported_in(tk, &[i, j, h]) {
                    continue;
                }
                let mut alpha = [0; 4];
                alpha[i] = ai;
                alpha[j] = aj;
                alpha[h] = ah;
                alpha[k] = ak;
                let mut alpha_ij = [[0; 4]; 4];
                alpha_ij[h] = std::array::from_fn(|v| th.exp(v));
                alpha_ij[k] = std::array::from_fn(|v| tk.exp(v));
                alpha_ij[i][j] = aj;
                alpha_ij[j][i] = ai;
                return Some(BresinskyClass::CaseII {
                    perm: [i, j, h, k],
                    alpha,
                    alpha_ij,
                });
            }
        }
    }
    None
}

fn classify_five(gens: &[Binomial]) -> Option<BresinskyClass> {
    let mut alpha = [0u32; 4];
    let mut alpha_ij = [[0u32; 4]; 4];
    let mut tails = [[0usize; 2]; 4];
    let mut used = [false; 5];
    for i in 0..4 {
        let (g, e, tail) = gens.iter().enumerate().find_map(|(g, b)| {
            if used[g] {
                return None;
            }
            let (e, tail) = pure_side(b, i)?;
            let sup: Vec<usize> = tail.support().collect();
            (sup.len() == 2).then_some((g, e, tail))
        })?;
        used[g] = true;
        alpha[i] = e;
        let sup: Vec<usize> = tail.support().collect();
        tails[i] = [sup[0], sup[1]];
        for &v in &sup {
            alpha_ij[i][v] = tail.exp(v);
        }
    }
    let fifth = gens[used.iter().position(|u| !u)?].clone();
    if fifth.plus.support().count() != 2 || fifth.minus.support().count() != 2 {
        return None;
    }
    // every variable sits in exactly two tails, with exponents summing to alpha
    for v in 0..4 {
        let holders: Vec<usize> = (0..4).filter(|&i| tails[i].contains(&v)).collect();
        if holders.len() != 2 || holders.iter().map(|&i| alpha_ij[i][v]).sum::<u32>() != alpha[v] {
            return None;
        }
    }
    let subcase = match (tails[0], tails[1]) {
        ([2, 3], [0, 3]) => TailSubcase::OneA,
        ([2, 3], [0, 2]) => TailSubcase::OneB,
        ([1, 2], [2, 3]) => TailSubcase::TwoA,
        ([1, 2], [0, 3]) => TailSubcase::TwoB,
        ([1, 3], [0, 2]) => TailSubcase::ThreeA,
        ([1, 3], [2, 3]) => TailSubcase::ThreeB,
        _ => return None,
    };
    Some(BresinskyClass::CaseIII {
        subcase,
        alpha,
        alpha_ij,
        tails,
        fifth,
    })
}

/// Gorenstein test for Case III read off the exponents: the tail of the
/// `x_2` generator is at least as long as `alpha_2`, the `x_3` generator has
/// tail in `x_2, x_4` and that tail has length exactly `alpha_3`.
pub fn d4_gorenstein_fastpath(class: &BresinskyClass) -> Result<bool> {
    let BresinskyClass::CaseIII {
        alpha,
        alpha_ij,
        tails,
        ..
    } = class
    else {
        return Err(Error::NotApplicable("only Case III carries this test".into()));
    };
    let deg = |i: usize| alpha_ij[i].iter().sum::<u32>();
    Ok(alpha[1] <= deg(1) && tails[2] == [1, 3] && alpha[2] == deg(2))
}

/// Any classification this module can produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "class")]
pub enum Classification {
    Plane,
    Herzog(HerzogClass),
    Bresinsky(BresinskyClass),
    Unclassified,
}

/// Classifies by embedding dimension; ideals outside the two structure
/// theorems come back as `Unclassified`.
pub fn classify(ideal: &DefiningIdeal) -> Result<Classification> {
    match ideal.dim() {
        1 | 2 => Ok(Classification::Plane),
        3 => herzog_classify(ideal).map(Classification::Herzog),
        4 if ideal.semigroup.is_symmetric() => bresinsky_classify(ideal).map(Classification::Bresinsky),
        _ => Ok(Classification::Unclassified),
    }
}

/// `f + n_1` together with a factorization built from the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialElement {
    pub value: u64,
    pub coefficients: Vec<u32>,
}

/// For a complete intersection `f = sum(deg g) - sum(n_i)`, so
/// `f + n_1 = sum(deg g) - n_2 - ... - n_d`; picking one side of each
/// generator gives a factorization once `x_2 ... x_d` are divided out.
pub fn special_element(ideal: &DefiningIdeal, class: &Classification) -> Result<SpecialElement> {
    match class {
        Classification::Plane
        | Classification::Herzog(HerzogClass::Symmetric { .. })
        | Classification::Bresinsky(BresinskyClass::CaseI { .. })
        | Classification::Bresinsky(BresinskyClass::CaseII { .. }) => {}
        _ => {
            return Err(Error::NotApplicable(
                "no closed formula outside complete intersections".into(),
            ))
        }
    }
    let d = ideal.dim();
    if d < 2 {
        return Err(Error::NotApplicable("embedding dimension 1".into()));
    }
    let gens = &ideal.generators;
    let m = gens.len();
    for mask in 0u32..(1 << m) {
        let mut c: Vec<i64> = vec![0; d];
        for (t, b) in gens.iter().enumerate() {
            let side = if mask >> t & 1 == 0 { &b.plus } else { &b.minus };
            for (v, e) in side.exponents().iter().enumerate() {
                c[v] += *e as i64;
            }
        }
        for x in &mut c[1..] {
            *x -= 1;
        }
        if c.iter().all(|&x| x >= 0) {
            let coefficients: Vec<u32> = c.iter().map(|&x| x as u32).collect();
            let value = ideal.semigroup.weight_of(&coefficients);
            return Ok(SpecialElement { value, coefficients });
        }
    }
    Err(Error::StructureMismatch(
        "no choice of generator sides yields a factorization".into(),
    ))
}
