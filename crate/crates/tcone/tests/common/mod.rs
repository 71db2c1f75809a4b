//! Reference computations that share no code with the library beyond its
//! data types. Each one is brute force: enumeration of factorizations, or
//! elimination over the rationals on graded pieces.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use tcone::{Element, Monomial, MonomialOrder};

pub type Row = BTreeMap<usize, BigRational>;

/// Row echelon form over the rationals. Every stored row has its pivot as
/// its smallest column and is scaled so the pivot entry is one, which makes
/// `reduce` a linear projection onto the non-pivot columns.
#[derive(Default)]
pub struct Span {
    rows: BTreeMap<usize, Row>,
}

impl Span {
    pub fn reduce(&self, mut v: Row) -> Row {
        let mut cursor = 0;
        while let Some(c) = v.range(cursor..).map(|(c, _)| *c).find(|c| self.rows.contains_key(c)) {
            let coef = v[&c].clone();
            for (k, x) in &self.rows[&c] {
                let e = v.entry(*k).or_insert_with(BigRational::zero);
                *e -= &coef * x;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            cursor = c + 1;
        }
        v
    }

    /// Adds `v`; false when it was already in the span.
    pub fn insert(&mut self, v: Row) -> bool {
        let v = self.reduce(v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = BigRational::one() / lead.clone();
        let row: Row = v.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn contains(&self, v: Row) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn unit(i: usize) -> Row {
    Row::from([(i, BigRational::one())])
}

/// Rank of vectors that are `e_a - e_b` or `e_a`. Such a family is the edge
/// set of a graph with an extra ground vertex for the single entries, and its
/// rank over the rationals is the number of edges in a spanning forest.
pub fn graphic_rank(cols: usize, vectors: impl IntoIterator<Item = (usize, Option<usize>)>) -> usize {
    let mut parent: Vec<usize> = (0..=cols).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut rank = 0;
    for (a, b) in vectors {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b.unwrap_or(cols)));
        if ra != rb {
            parent[ra] = rb;
            rank += 1;
        }
    }
    rank
}

// ---------------------------------------------------------------- semigroups

/// Membership in `<gens>` for `0..=max`.
pub fn members(gens: &[u64], max: u64) -> Vec<bool> {
    let mut t = vec![false; max as usize + 1];
    t[0] = true;
    for z in 1..=max as usize {
        t[z] = gens.iter().any(|&n| n as usize <= z && t[z - n as usize]);
    }
    t
}

pub fn frobenius(gens: &[u64]) -> i64 {
    let bound = gens[0] * gens[gens.len() - 1];
    let t = members(gens, bound);
    (0..=bound as i64).rev().find(|&z| !t[z as usize]).unwrap_or(-1)
}

/// Largest number of generators summing to `z`, for `z` in `0..=max`.
pub fn ord_table(gens: &[u64], max: u64) -> Vec<Option<u32>> {
    let mut t: Vec<Option<u32>> = vec![None; max as usize + 1];
    t[0] = Some(0);
    for z in 1..=max as usize {
        t[z] = gens
            .iter()
            .filter(|&&n| n as usize <= z)
            .filter_map(|&n| t[z - n as usize].map(|o| o + 1))
            .max();
    }
    t
}

/// All coefficient vectors `c` with `sum c_i n_i = z`.
pub fn factorizations(gens: &[u64], z: u64) -> Vec<Vec<u32>> {
    fn go(gens: &[u64], i: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == gens.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=rest / gens[i] {
            cur.push(k as u32);
            go(gens, i + 1, rest - k * gens[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, 0, z, &mut Vec::new(), &mut out);
    out
}

/// Degrees of a minimal binomial generating set of the defining ideal, with
/// multiplicity: a value with `k` connected components in its factorization
/// graph contributes `k - 1` generators.
///
/// Factorizations in different components share no variable, so for `i`, `j`
/// in different components `b - n_i - n_j` is a gap; hence
/// `b <= F + n_{d-1} + n_d`.
pub fn betti_degrees(gens: &[u64]) -> Vec<u64> {
    let d = gens.len();
    if d < 2 {
        return Vec::new();
    }
    let bound = (frobenius(gens) + (gens[d - 2] + gens[d - 1]) as i64).max(0) as u64;
    let t = members(gens, bound);
    let mut out = Vec::new();
    for b in 1..=bound {
        if gens.iter().filter(|&&n| n <= b && t[(b - n) as usize]).count() < 2 {
            continue;
        }
        let facts = factorizations(gens, b);
        let mut comp: Vec<usize> = (0..facts.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = facts.len();
        for i in 0..facts.len() {
            for j in i + 1..facts.len() {
                if (0..d).any(|v| facts[i][v] > 0 && facts[j][v] > 0) {
                    let (a, c) = (find(&mut comp, i), find(&mut comp, j));
                    if a != c {
                        comp[a] = c;
                        components -= 1;
                    }
                }
            }
        }
        out.extend(std::iter::repeat_n(b, components.saturating_sub(1)));
    }
    out
}

/// Brute-force list of minimally generated semigroups with generators
/// `n_1 < ... < n_d <= max`.
pub fn semigroups_brute(d: usize, max: u64) -> Vec<Vec<u64>> {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(d: usize, start: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == d {
            if cur.iter().fold(0, |a, &n| gcd(a, n)) != 1 {
                return;
            }
            let minimal = (0..d).all(|i| {
                let others: Vec<u64> = cur.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &n)| n).collect();
                !members(&others, cur[i])[cur[i] as usize]
            });
            if minimal {
                out.push(cur.clone());
            }
            return;
        }
        for n in start..=max {
            cur.push(n);
            go(d, n + 1, max, cur, out);
            cur.pop();
        }
    }
    go(d, 2, max, &mut cur, &mut out);
    out
}

// ------------------------------------------------------------ tangent cones

pub fn monomials_of_degree(d: usize, n: u32) -> Vec<Vec<u32>> {
    if d == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for e in (0..=n).rev() {
        for mut rest in monomials_of_degree(d - 1, n - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

fn value(gens: &[u64], e: &[u32]) -> u64 {
    gens.iter().zip(e).map(|(&n, &k)| n * k as u64).sum()
}

/// The graded ring in degree `n` has basis `t^z` with `ord(z) = n`, and
/// `x^a` maps to `t^{w.a}` or to zero when `ord(w.a) > n`. The initial form
/// ideal in degree `n` is the kernel of this map; its leading monomials are
/// those whose image lies in the span of the images of smaller monomials.
pub fn initial_leading_monomials(gens: &[u64], order: &MonomialOrder, n: u32, ord: &[Option<u32>]) -> BTreeSet<Monomial> {
    let mut ms: Vec<Monomial> = monomials_of_degree(gens.len(), n)
        .into_iter()
        .map(|e| Monomial::new(&e))
        .collect();
    ms.sort_by(|a, b| order.compare(a, b));
    let mut span = Span::default();
    let mut out = BTreeSet::new();
    for m in ms {
        let z = value(gens, m.exponents());
        let image = match ord[z as usize] {
            Some(o) if o == n => unit(z as usize),
            Some(o) => {
                assert!(o > n, "ord below degree");
                Row::new()
            }
            None => unreachable!("values of monomials lie in the semigroup"),
        };
        if !span.insert(image) {
            out.insert(m);
        }
    }
    out
}

/// Number of minimal generators of the initial form ideal in degree `n`:
/// `dim I*_n - dim (M I*_{n-1})_n`.
pub fn initial_generators_in_degree(gens: &[u64], n: u32, ord: &[Option<u32>]) -> usize {
    let d = gens.len();
    // kernel basis in a degree: zero-image monomials and fiber differences
    let kernel = |k: u32| -> Vec<(Vec<u32>, Option<Vec<u32>>)> {
        let mut fibers: BTreeMap<u64, Vec<Vec<u32>>> = BTreeMap::new();
        let mut out = Vec::new();
        for e in monomials_of_degree(d, k) {
            let z = value(gens, &e);
            if ord[z as usize] == Some(k) {
                fibers.entry(z).or_default().push(e);
            } else {
                out.push((e, None));
            }
        }
        for fiber in fibers.values() {
            for e in &fiber[1..] {
                out.push((e.clone(), Some(fiber[0].clone())));
            }
        }
        out
    };
    let index: HashMap<Vec<u32>, usize> = monomials_of_degree(d, n)
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let here = kernel(n);
    if n == 0 {
        return here.len();
    }
    let shifted = kernel(n - 1).into_iter().flat_map(|(p, q)| {
        (0..d).map(move |v| {
            let mut p = p.clone();
            p[v] += 1;
            let q = q.clone().map(|mut q| {
                q[v] += 1;
                q
            });
            (p, q)
        })
    });
    let rank = graphic_rank(index.len(), shifted.map(|(p, q)| (index[&p], q.map(|q| index[&q]))));
    here.len() - rank
}

// -------------------------------------------------- three-variable ideals

pub type Poly = Vec<([u32; 3], i64)>;

pub fn poly_of(e: &Element) -> Poly {
    let ex = |m: &Monomial| [m.exp(0), m.exp(1), m.exp(2)];
    match e {
        Element::Monomial(m) => vec![(ex(m), 1)],
        Element::Binomial(b) => vec![(ex(&b.plus), 1), (ex(&b.minus), -1)],
    }
}

pub fn mono(e: [u32; 3]) -> Poly {
    vec![(e, 1)]
}

pub fn binom(p: [u32; 3], q: [u32; 3]) -> Poly {
    vec![(p, 1), (q, -1)]
}

/// An ideal of `k[x,y,z]` with generators homogeneous for weights `w`,
/// handled degree by degree.
pub struct GradedIdeal {
    pub w: [u32; 3],
    gens: Vec<(u32, Poly)>,
    cache: HashMap<u32, Span>,
}

pub fn weighted_monomials(w: [u32; 3], deg: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in 0..=deg / w[0] {
        let r = deg - i * w[0];
        for j in 0..=r / w[1] {
            let s = r - j * w[1];
            if s.is_multiple_of(w[2]) {
                out.push([i, j, s / w[2]]);
            }
        }
    }
    out
}

pub fn wdeg(w: [u32; 3], e: [u32; 3]) -> u32 {
    (0..3).map(|i| w[i] * e[i]).sum()
}

impl GradedIdeal {
    pub fn new(w: [u32; 3], gens: Vec<Poly>) -> Self {
        let gens = gens
            .into_iter()
            .map(|p| {
                let deg = wdeg(w, p[0].0);
                assert!(p.iter().all(|(e, _)| wdeg(w, *e) == deg), "generator is not homogeneous");
                (deg, p)
            })
            .collect();
        GradedIdeal {
            w,
            gens,
            cache: HashMap::new(),
        }
    }

    fn index(&self, deg: u32) -> HashMap<[u32; 3], usize> {
        weighted_monomials(self.w, deg).into_iter().enumerate().map(|(i, e)| (e, i)).collect()
    }

    pub fn row(&self, p: &Poly) -> Row {
        let deg = wdeg(self.w, p[0].0);
        let idx = self.index(deg);
        let mut r = Row::new();
        for (e, c) in p {
            let entry = r.entry(idx[e]).or_insert_with(BigRational::zero);
            *entry += BigRational::from_integer((*c).into());
            if entry.is_zero() {
                r.remove(&idx[e]);
            }
        }
        r
    }

    fn span(&mut self, deg: u32) -> &Span {
        if !self.cache.contains_key(&deg) {
            let mut span = Span::default();
            for (gd, g) in &self.gens {
                if *gd > deg {
                    continue;
                }
                for u in weighted_monomials(self.w, deg - gd) {
                    let p: Poly = g.iter().map(|(e, c)| ([e[0] + u[0], e[1] + u[1], e[2] + u[2]], *c)).collect();
                    span.insert(self.row(&p));
                }
            }
            self.cache.insert(deg, span);
        }
        &self.cache[&deg]
    }

    pub fn dim(&mut self, deg: u32) -> usize {
        self.span(deg).rank()
    }

    pub fn contains(&mut self, p: &Poly) -> bool {
        let deg = wdeg(self.w, p[0].0);
        let r = self.row(p);
        self.span(deg).contains(r)
    }

    /// Image of `m * x^e` in the quotient, as a reduced row.
    fn reduced_product(&mut self, m: [u32; 3], e: [u32; 3]) -> Row {
        let p = mono([m[0] + e[0], m[1] + e[1], m[2] + e[2]]);
        let r = self.row(&p);
        let deg = wdeg(self.w, p[0].0);
        self.span(deg).reduce(r)
    }

    /// `dim (I : m)_deg`.
    pub fn colon_dim(&mut self, m: [u32; 3], deg: u32) -> usize {
        let basis = weighted_monomials(self.w, deg);
        let mut span = Span::default();
        for u in &basis {
            let r = self.reduced_product(m, *u);
            span.insert(r);
        }
        basis.len() - span.rank()
    }

    /// `dim ((I : (x,y,z)) / I)_deg`.
    pub fn socle_dim(&mut self, deg: u32) -> usize {
        let basis = weighted_monomials(self.w, deg);
        let offsets: Vec<usize> = (0..3)
            .scan(0, |acc, v| {
                let here = *acc;
                *acc += weighted_monomials(self.w, deg + self.w[v]).len();
                Some(here)
            })
            .collect();
        let mut span = Span::default();
        for u in &basis {
            let mut row = Row::new();
            for v in 0..3 {
                let mut e = [0; 3];
                e[v] = 1;
                for (k, x) in self.reduced_product(e, *u) {
                    row.insert(offsets[v] + k, x);
                }
            }
            span.insert(row);
        }
        basis.len() - span.rank() - self.dim(deg)
    }

    /// Cohen-Macaulay type of the artinian quotient, whose socle lives in
    /// degrees up to `top`.
    pub fn artinian_type(&mut self, top: u32) -> usize {
        (0..=top).map(|deg| self.socle_dim(deg)).sum()
    }
}

/// `(f, y^b, z^c)` with `f = x^a - y^b' z^c'` and the weights making it
/// homogeneous.
pub fn complete_intersection(a: u32, b: u32, c: u32, bp: u32, cp: u32) -> (GradedIdeal, u32) {
    let w = [bp + cp, a, a];
    let gens = vec![binom([a, 0, 0], [0, bp, cp]), mono([0, b, 0]), mono([0, 0, c])];
    let top = (a - 1) * w[0] + (b - 1) * w[1] + (c - 1) * w[2];
    (GradedIdeal::new(w, gens), top)
}

pub fn ideal_with(w: [u32; 3], gens: Vec<Poly>) -> GradedIdeal {
    GradedIdeal::new(w, gens)
}

// ------------------------------------------------------------------ checks

/// Compares the standard basis of the defining ideal under the default
/// order, and the minimal generators of the defining ideal, against the
/// brute-force computations above.
pub fn check_standard_basis(gens: &[u64]) -> Result<(), String> {
    use tcone::{defining_ideal, NumericalSemigroup, StandardBasis};
    let g = NumericalSemigroup::new(gens).map_err(|e| e.to_string())?;
    let d = gens.len();
    let order = MonomialOrder::default_for(d);
    let ideal = defining_ideal(&g);

    let mut degrees = ideal.degrees.clone();
    degrees.sort_unstable();
    let expected = betti_degrees(gens);
    if degrees != expected {
        return Err(format!("{gens:?}: relation degrees {degrees:?}, factorization graphs give {expected:?}"));
    }

    let sb = StandardBasis::compute(&ideal.elements(), &order, gens).map_err(|e| e.to_string())?;
    let lms = sb.leading_monomials();
    let top = lms.iter().map(Monomial::degree).max().unwrap_or(0);
    let bound = top + gens[0] as u32;
    let ord = ord_table(gens, gens[d - 1] * bound as u64);
    for n in 0..=bound {
        let oracle = initial_leading_monomials(gens, &order, n, &ord);
        let ours: BTreeSet<Monomial> = monomials_of_degree(d, n)
            .into_iter()
            .map(|e| Monomial::new(&e))
            .filter(|m| lms.iter().any(|l| l.divides(m)))
            .collect();
        if oracle != ours {
            return Err(format!("{gens:?}: leading monomials differ in degree {n}"));
        }
    }

    let mu: usize = (0..=top + 1).map(|n| initial_generators_in_degree(gens, n, &ord)).sum();
    let ifi = sb.initial_form_ideal();
    if mu != ifi.mu() {
        return Err(format!("{gens:?}: mu(I*) = {} but elimination gives {mu}", ifi.mu()));
    }
    Ok(())
}

fn times(p: &Poly, m: [u32; 3]) -> Poly {
    p.iter().map(|(e, c)| ([e[0] + m[0], e[1] + m[1], e[2] + m[2]], *c)).collect()
}

fn m3(e: [u32; 3]) -> Monomial {
    Monomial::new(&e)
}

/// `(f, y^b, z^c) : x^α y^β z^γ` from the library against the degreewise
/// kernel of multiplication by the monomial on `k[x,y,z]/(f, y^b, z^c)`.
pub fn check_colon(a: u32, b: u32, c: u32, bp: u32, cp: u32, ms: &[[u32; 3]]) -> Result<(), String> {
    use tcone::almost_monomial::{colon_by_monomial, AlmostMonomialIdeal};
    let j = AlmostMonomialIdeal::new(Some((a, bp, cp)), vec![m3([0, b, 0]), m3([0, 0, c])]).map_err(|e| e.to_string())?;
    let (mut gj, top) = complete_intersection(a, b, c, bp, cp);
    for &m in ms {
        let q = colon_by_monomial(&j, &m3(m)).map_err(|e| e.to_string())?;
        let qgens: Vec<Poly> = q.minimal_generators().iter().map(poly_of).collect();
        let mut gq = ideal_with(gj.w, qgens.clone());
        let label = format!("(a,b,c,b',c') = ({a},{b},{c},{bp},{cp}), m = {m:?}");
        for p in &qgens {
            if !gj.contains(&times(p, m)) {
                return Err(format!("{label}: {p:?} times m is not in J"));
            }
        }
        for p in [binom([a, 0, 0], [0, bp, cp]), mono([0, b, 0]), mono([0, 0, c])] {
            if !gq.contains(&p) {
                return Err(format!("{label}: colon misses {p:?}"));
            }
        }
        for deg in 0..=top {
            let (ours, brute) = (gq.dim(deg), gj.colon_dim(m, deg));
            if ours != brute {
                return Err(format!("{label}: degree {deg} has dimension {ours}, kernel has {brute}"));
            }
        }
    }
    Ok(())
}

/// Type of `(f, y^b, z^c) + (extra)` by linkage against the socle dimension
/// of the quotient. `None` when the library rejects the ideal as not
/// strict; the rejection itself is checked.
pub fn check_type(a: u32, b: u32, c: u32, bp: u32, cp: u32, extra: &[[u32; 3]]) -> Result<Option<usize>, String> {
    use tcone::almost_monomial::{link_and_type, AlmostMonomialIdeal};
    let mut mons = vec![m3([0, b, 0]), m3([0, 0, c])];
    mons.extend(extra.iter().map(|&e| m3(e)));
    let l = AlmostMonomialIdeal::new(Some((a, bp, cp)), mons).map_err(|e| e.to_string())?;
    let label = format!("(a,b,c,b',c') = ({a},{b},{c},{bp},{cp}) + {extra:?}");
    let ours = match link_and_type(&l) {
        Ok(t) => t,
        Err(_) if !l.strict => return Ok(None),
        Err(e) => return Err(format!("{label}: {e}")),
    };
    let (gj, top) = complete_intersection(a, b, c, bp, cp);
    let mut gens = vec![binom([a, 0, 0], [0, bp, cp]), mono([0, b, 0]), mono([0, 0, c])];
    gens.extend(extra.iter().map(|&e| mono(e)));
    let brute = ideal_with(gj.w, gens).artinian_type(top);
    if ours != brute {
        return Err(format!("{label}: linkage gives type {ours}, socle has dimension {brute}"));
    }
    Ok(Some(ours))
}

/// Type of a monomial ideal containing `x^p, y^q, z^r` by linkage against
/// the socle dimension.
pub fn check_monomial_type(gens: &[[u32; 3]]) -> Result<usize, String> {
    use tcone::almost_monomial::{link_and_type, AlmostMonomialIdeal};
    let l = AlmostMonomialIdeal::monomial(gens.iter().map(|&e| m3(e)).collect());
    let ours = link_and_type(&l).map_err(|e| format!("{gens:?}: {e}"))?;
    let top: u32 = (0..3).map(|v| l.pure_power(v).expect("artinian") - 1).sum();
    let brute = ideal_with([1, 1, 1], gens.iter().map(|&e| mono(e)).collect()).artinian_type(top);
    if ours != brute {
        return Err(format!("{gens:?}: linkage gives type {ours}, socle has dimension {brute}"));
    }
    Ok(ours)
}

/// Length of `H^0` of the associated graded ring, counted on values: `x1^K`
/// sends the basis element `t^z` of degree `ord(z)` to `t^{z + K n1}`,
/// which is zero exactly when `ord(z + K n1) > ord(z) + K`. The kernel for
/// large `K` is `H^0`.
pub fn h0_length_by_values(gens: &[u64]) -> usize {
    let count = |span: u64| -> usize {
        let n1 = gens[0];
        let k = span / n1 + 2;
        let ord = ord_table(gens, span + k * n1);
        (0..=span)
            .filter_map(|z| ord[z as usize].map(|o| (z, o)))
            .filter(|&(z, o)| ord[(z + k * n1) as usize].expect("semigroup element") > o + k as u32)
            .count()
    };
    let span = 4 * (frobenius(gens).max(0) as u64 + gens[gens.len() - 1]);
    let len = count(span);
    assert_eq!(len, count(2 * span), "{gens:?}: H0 count not stable");
    len
}

/// Hilbert function of the associated graded ring: values of order `n`.
pub fn hilbert_by_values(gens: &[u64], n: u32) -> usize {
    let max = gens[gens.len() - 1] * n as u64;
    ord_table(gens, max).iter().filter(|o| **o == Some(n)).count()
}
