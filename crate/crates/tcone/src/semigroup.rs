//! Numerical semigroups: membership, Apéry sets, factorizations and orders.

use std::num::NonZeroUsize;
use std::sync::{Mutex, RwLock};

use lru::LruCache;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;
const FACTORIZATION_CACHE: usize = 2048;

/// A solution of `sum a_i n_i = value`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub coefficients: Vec<u32>,
    pub value: u64,
    pub length: u32,
}

impl Factorization {
    fn from_coefficients(coefficients: Vec<u32>, gens: &[u64]) -> Self {
        let value = coefficients
            .iter()
            .zip(gens)
            .map(|(&a, &n)| a as u64 * n)
            .sum();
        let length = coefficients.iter().sum();
        Factorization {
            coefficients,
            value,
            length,
        }
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &Factorization) -> bool {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperySet {
    pub modulus: u64,
    /// Sorted ascending, `elements[0] == 0`.
    pub elements: Vec<u64>,
}

impl AperySet {
    pub fn max(&self) -> u64 {
        *self.elements.last().expect("Apéry sets are nonempty")
    }
}

#[derive(Debug, Default)]
struct OrderTable {
    longest: Vec<u32>,
    shortest: Vec<u32>,
}

/// `G = <n_1, ..., n_d>` with `gcd = 1`, minimally generated.
///
/// Generator indices are 0-based throughout the library.
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    frobenius: i64,
    member: Vec<bool>,
    orders: RwLock<OrderTable>,
    factorization_cache: Mutex<LruCache<u64, Vec<Factorization>>>,
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        NumericalSemigroup {
            gens: self.gens.clone(),
            frobenius: self.frobenius,
            member: self.member.clone(),
            orders: RwLock::new(OrderTable::default()),
            factorization_cache: Mutex::new(new_cache()),
        }
    }
}

impl std::fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.gens.iter().map(u64::to_string).collect();
        write!(f, "<{}>", body.join(","))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for NumericalSemigroup {}

/// Largest admissible `(n1 - 1)(nd - 1)`.
pub const MAX_TABLE: u64 = 10_000_000;

fn new_cache() -> LruCache<u64, Vec<Factorization>> {
    LruCache::new(NonZeroUsize::new(FACTORIZATION_CACHE).unwrap())
}

/// Membership table of the monoid generated by `gens` on `0..len`.
fn monoid_table(gens: &[u64], len: usize) -> Vec<bool> {
    let mut t = vec![false; len];
    if len > 0 {
        t[0] = true;
    }
    for z in 1..len {
        t[z] = gens
            .iter()
            .any(|&n| n as usize <= z && t[z - n as usize]);
    }
    t
}

impl NumericalSemigroup {
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Empty);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositive);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u64, |acc, &n| acc.gcd(&n));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        // Schur's bound on the Frobenius number sizes the membership table
        let schur = (gens[0] - 1).saturating_mul(*gens.last().unwrap() - 1);
        if schur > MAX_TABLE {
            return Err(Error::CapExceeded {
                what: "(n1 - 1)(nd - 1)",
                value: schur,
                cap: MAX_TABLE,
            });
        }
        for (i, &n) in gens.iter().enumerate() {
            let table = monoid_table(&gens[..i], n as usize + 1);
            if table[n as usize] {
                return Err(Error::NotMinimal(n));
            }
        }
        let n1 = gens[0] as usize;
        let max = *gens.last().unwrap() as usize;
        // grow the DP in blocks until a run of n1 consecutive members appears
        let mut member: Vec<bool> = vec![true];
        let mut run = 1usize;
        let mut z = 1usize;
        while run < n1 {
            let m = gens
                .iter()
                .any(|&n| n as usize <= z && member[z - n as usize]);
            member.push(m);
            run = if m { run + 1 } else { 0 };
            z += 1;
        }
        let frobenius = z as i64 - n1 as i64 - 1;
        let len = (frobenius + 1).max(0) as usize + max + 1;
        member.resize(len, true);
        Ok(NumericalSemigroup {
            gens,
            frobenius,
            member,
            orders: RwLock::new(OrderTable::default()),
            factorization_cache: Mutex::new(new_cache()),
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        if z > self.frobenius {
            return true;
        }
        self.member[z as usize]
    }

    fn check_member(&self, z: u64) -> Result<()> {
        if self.contains(z as i64) {
            Ok(())
        } else {
            Err(Error::NotMember(z as i64))
        }
    }

    pub fn apery(&self, e: u64) -> Result<AperySet> {
        if e == 0 {
            return Err(Error::NotMember(0));
        }
        self.check_member(e)?;
        let mut first = vec![None; e as usize];
        let mut found = 0;
        let mut z = 0u64;
        while found < e {
            if self.contains(z as i64) {
                let r = (z % e) as usize;
                if first[r].is_none() {
                    first[r] = Some(z);
                    found += 1;
                }
            }
            z += 1;
        }
        let mut elements: Vec<u64> = first.into_iter().map(Option::unwrap).collect();
        elements.sort_unstable();
        Ok(AperySet {
            modulus: e,
            elements,
        })
    }

    /// `Ap(G, n_1)`.
    pub fn apery_multiplicity(&self) -> AperySet {
        self.apery(self.gens[0]).expect("generators are members")
    }

    fn ensure_orders(&self, z: u64) {
        let need = z as usize + 1;
        if self.orders.read().unwrap().longest.len() >= need {
            return;
        }
        let mut t = self.orders.write().unwrap();
        let start = t.longest.len();
        if start >= need {
            return;
        }
        let target = need.max(2 * start).max(64);
        t.longest.resize(target, NONE);
        t.shortest.resize(target, NONE);
        for v in start..target {
            if v == 0 {
                t.longest[0] = 0;
                t.shortest[0] = 0;
                continue;
            }
            let (mut hi, mut lo) = (NONE, NONE);
            for &n in &self.gens {
                let n = n as usize;
                if n > v || t.longest[v - n] == NONE {
                    continue;
                }
                let a = t.longest[v - n] + 1;
                let b = t.shortest[v - n] + 1;
                hi = if hi == NONE { a } else { hi.max(a) };
                lo = lo.min(b);
            }
            t.longest[v] = hi;
            t.shortest[v] = lo;
        }
    }

    /// Maximal factorization length of `z`.
    pub fn ord(&self, z: u64) -> Result<u32> {
        self.check_member(z)?;
        self.ensure_orders(z);
        Ok(self.orders.read().unwrap().longest[z as usize])
    }

    /// `ord` for values known to lie in `G`.
    pub(crate) fn ord_unchecked(&self, z: u64) -> u32 {
        self.ensure_orders(z);
        self.orders.read().unwrap().longest[z as usize]
    }

    /// `ord(z)` or `None` when `z` is not in `G`.
    pub fn ord_opt(&self, z: i64) -> Option<u32> {
        if self.contains(z) {
            Some(self.ord_unchecked(z as u64))
        } else {
            None
        }
    }

    pub fn min_ord(&self, z: u64) -> Result<u32> {
        self.check_member(z)?;
        self.ensure_orders(z);
        Ok(self.orders.read().unwrap().shortest[z as usize])
    }

    pub fn elasticity(&self, z: u64) -> Result<Ratio<u64>> {
        if z == 0 {
            return Err(Error::PreconditionViolated(
                "elasticity needs a positive element".into(),
            ));
        }
        let hi = self.ord(z)?;
        let lo = self.min_ord(z)?;
        Ok(Ratio::new(hi as u64, lo as u64))
    }

    /// All factorizations of `z`, sorted lexicographically by coefficients.
    pub fn factorizations(&self, z: i64) -> Vec<Factorization> {
        if !self.contains(z) {
            return Vec::new();
        }
        let z = z as u64;
        if let Some(hit) = self.factorization_cache.lock().unwrap().get(&z) {
            return hit.clone();
        }
        let list = enumerate_factorizations(&self.gens, z);
        self.factorization_cache
            .lock()
            .unwrap()
            .put(z, list.clone());
        list
    }

    /// Factorizations of maximal length.
    pub fn maximal_factorizations(&self, z: u64) -> Result<Vec<Factorization>> {
        let top = self.ord(z)?;
        Ok(self
            .factorizations(z as i64)
            .into_iter()
            .filter(|f| f.length == top)
            .collect())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.frobenius).all(|z| self.contains(z) != self.contains(self.frobenius - z))
    }

    /// `x ⪯_G y`: some maximal factorization of `x` is dominated by one of `y`.
    pub fn precedes(&self, x: u64, y: u64) -> Result<bool> {
        let xs = self.maximal_factorizations(x)?;
        let ys = self.maximal_factorizations(y)?;
        Ok(xs.iter().any(|a| ys.iter().any(|b| a.dominated_by(b))))
    }

    /// Pairs of `Ap(G, n_1)` summing to its maximum have additive orders.
    pub fn dagger_condition(&self) -> bool {
        let ap = self.apery_multiplicity();
        let top = ap.max();
        let top_ord = self.ord_unchecked(top);
        let set: std::collections::HashSet<u64> = ap.elements.iter().copied().collect();
        ap.elements.iter().all(|&w| {
            if w > top || !set.contains(&(top - w)) {
                return true;
            }
            self.ord_unchecked(w) + self.ord_unchecked(top - w) == top_ord
        })
    }

    /// Least `α ≥ 1` with `α n_i` in the monoid generated by the other generators.
    pub fn alpha(&self, i: usize) -> Result<u32> {
        let d = self.gens.len();
        if i >= d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: i + 1,
            });
        }
        if d == 1 {
            return Err(Error::NotApplicable("alpha needs at least two generators".into()));
        }
        let others: Vec<u64> = self
            .gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &n)| n)
            .collect();
        let ni = self.gens[i];
        // n_i * others[0] always lands, so the bound is others[0]
        let bound = others[0];
        let table = monoid_table(&others, (bound * ni) as usize + 1);
        let a = (1..=bound)
            .find(|&a| table[(a * ni) as usize])
            .expect("a multiple of n_i lies in the other generators' monoid");
        Ok(a as u32)
    }

    /// `sum a_i n_i` for a coefficient vector.
    pub fn weight_of(&self, coefficients: &[u32]) -> u64 {
        coefficients
            .iter()
            .zip(&self.gens)
            .map(|(&a, &n)| a as u64 * n)
            .sum()
    }
}

fn enumerate_factorizations(gens: &[u64], z: u64) -> Vec<Factorization> {
    let d = gens.len();
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; d];
    fn rec(
        gens: &[u64],
        i: usize,
        rest: u64,
        coeffs: &mut Vec<u32>,
        out: &mut Vec<Factorization>,
    ) {
        if i == 0 {
            if rest.is_multiple_of(gens[0]) {
                coeffs[0] = (rest / gens[0]) as u32;
                out.push(Factorization::from_coefficients(coeffs.clone(), gens));
                coeffs[0] = 0;
            }
            return;
        }
        let n = gens[i];
        let mut a = 0u64;
        while a * n <= rest {
            coeffs[i] = a as u32;
            rec(gens, i - 1, rest - a * n, coeffs, out);
            a += 1;
        }
        coeffs[i] = 0;
    }
    rec(gens, d - 1, z, &mut coeffs, &mut out);
    out.sort_by(|a, b| a.coefficients.cmp(&b.coefficients));
    out
}

/// Ascending generator tuples `n_1 < ... < n_d <= max_gen` that define a
/// minimally generated numerical semigroup.
pub fn enumerate_semigroups(d: usize, max_gen: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(d: usize, start: u64, max_gen: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == d {
            let g = cur.iter().fold(0u64, |acc, &n| acc.gcd(&n));
            if g == 1 && is_minimal(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for n in start..=max_gen {
            // the smallest generator bounds how many others can be minimal
            if !cur.is_empty() && cur.len() as u64 >= cur[0] {
                return;
            }
            cur.push(n);
            rec(d, n + 1, max_gen, cur, out);
            cur.pop();
        }
    }
    rec(d, 2, max_gen, &mut cur, &mut out);
    if d == 1 && max_gen >= 1 {
        out.insert(0, vec![1]);
    }
    out
}

fn is_minimal(gens: &[u64]) -> bool {
    gens.iter().enumerate().all(|(i, &n)| {
        let table = monoid_table(&gens[..i], n as usize + 1);
        !table[n as usize]
    })
}
