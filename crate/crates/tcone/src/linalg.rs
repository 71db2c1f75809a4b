//! Exact sparse linear algebra over the rationals by fraction-free elimination.
//!
//! Vectors are integer-valued sparse maps; every combination step is
//! `r_p * v - v_p * r` followed by division by the content, so no fractions
//! ever appear.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseVec = BTreeMap<usize, BigInt>;

pub fn unit(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, BigInt::one());
    v
}

fn axpy(a: &BigInt, v: &SparseVec, b: &BigInt, r: &SparseVec) -> SparseVec {
    // a*v - b*r
    let mut out = SparseVec::new();
    for (&k, x) in v {
        out.insert(k, a * x);
    }
    for (&k, y) in r {
        let e = out.entry(k).or_insert_with(BigInt::zero);
        *e -= b * y;
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn content(vs: &[&SparseVec]) -> BigInt {
    let mut g = BigInt::zero();
    for v in vs {
        for x in v.values() {
            g = g.gcd(x);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

fn divide(v: &mut SparseVec, g: &BigInt) {
    for x in v.values_mut() {
        *x = &*x / g;
    }
}

#[derive(Debug, Clone)]
struct Row {
    v: SparseVec,
    combo: SparseVec,
}

/// Incremental row echelon form; each stored row remembers which input
/// vectors it combines.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivots: HashMap<usize, usize>,
    inserted: usize,
}

/// Outcome of inserting a vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insert {
    /// The vector was independent of the earlier ones; its pivot column.
    Independent(usize),
    /// A dependency: integer combination of inserted vectors (by insertion
    /// index) that vanishes.
    Dependent(SparseVec),
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`, returning whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> Insert {
        let idx = self.inserted;
        self.inserted += 1;
        let mut v = v;
        v.retain(|_, x| !x.is_zero());
        let mut combo = unit(idx);
        loop {
            let Some((&p, vp)) = v.iter().next() else {
                return Insert::Dependent(combo);
            };
            match self.pivots.get(&p) {
                None => {
                    let g = content(&[&v, &combo]);
                    if !g.is_one() && !g.is_zero() {
                        divide(&mut v, &g);
                        divide(&mut combo, &g);
                    }
                    self.pivots.insert(p, self.rows.len());
                    self.rows.push(Row { v, combo });
                    return Insert::Independent(p);
                }
                Some(&ri) => {
                    let r = &self.rows[ri];
                    let rp = r.v[&p].clone();
                    let vp = vp.clone();
                    let l = rp.lcm(&vp);
                    let a = &l / &rp;
                    let b = &l / &vp;
                    // b*v - a*r kills column p
                    let mut nv = axpy(&b, &v, &a, &r.v);
                    let mut nc = axpy(&b, &combo, &a, &r.combo);
                    let g = content(&[&nv, &nc]);
                    if !g.is_one() && !g.is_zero() {
                        divide(&mut nv, &g);
                        divide(&mut nc, &g);
                    }
                    v = nv;
                    combo = nc;
                }
            }
        }
    }

    /// Whether `v` lies in the span (does not modify `self`).
    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v: SparseVec = v.iter().filter(|(_, x)| !x.is_zero()).map(|(&k, x)| (k, x.clone())).collect();
        loop {
            let Some((&p, vp)) = v.iter().next() else {
                return true;
            };
            let Some(&ri) = self.pivots.get(&p) else {
                return false;
            };
            let r = &self.rows[ri].v;
            let rp = &r[&p];
            let l = rp.lcm(vp);
            let a = &l / rp;
            let b = &l / vp;
            v = axpy(&b, &v, &a, r);
        }
    }
}

/// Rank of a set of vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Kernel of the map sending basis vector `j` to `columns[j]`, as vectors in
/// the domain, brought to reduced echelon form with positive pivots.
pub fn kernel(columns: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for c in columns {
        if let Insert::Dependent(k) = e.insert(c.clone()) {
            out.push(k);
        }
    }
    reduce_basis(out)
}

/// Reduced row echelon form of a basis (pivots are the largest index of each
/// vector, so dependencies found column by column stay recognizable).
pub fn reduce_basis(vs: Vec<SparseVec>) -> Vec<SparseVec> {
    let mut rows: Vec<SparseVec> = Vec::new();
    for v in vs {
        let mut v = v;
        for r in &rows {
            let (&p, rp) = r.iter().next_back().unwrap();
            if let Some(vp) = v.get(&p).cloned() {
                let l = rp.lcm(&vp);
                v = axpy(&(&l / &vp), &v, &(&l / rp), r);
            }
        }
        if v.is_empty() {
            continue;
        }
        normalize(&mut v);
        let (&p, _) = v.iter().next_back().unwrap();
        for r in rows.iter_mut() {
            if let Some(rp) = r.get(&p).cloned() {
                let vp = v[&p].clone();
                let l = rp.lcm(&vp);
                *r = axpy(&(&l / &rp), r, &(&l / &vp), &v);
                normalize(r);
            }
        }
        rows.push(v);
    }
    rows.sort_by_key(|r| *r.keys().next_back().unwrap());
    rows
}

fn normalize(v: &mut SparseVec) {
    let g = content(&[v]);
    if !g.is_zero() && !g.is_one() {
        divide(v, &g);
    }
    if let Some((_, x)) = v.iter().next_back() {
        if x.is_negative() {
            for x in v.values_mut() {
                *x = -&*x;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, x)| (k, BigInt::from(x))).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![sv(&[(0, 1), (1, 2)]), sv(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(rank(vec![sv(&[(0, 2), (1, 3)]), sv(&[(0, 4), (1, 5)]), sv(&[(2, 7)])]), 3);
        assert_eq!(rank(vec![SparseVec::new()]), 0);
    }

    #[test]
    fn dependencies_are_reported() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(sv(&[(0, 1), (1, 1)])), Insert::Independent(0));
        assert_eq!(e.insert(sv(&[(1, 1)])), Insert::Independent(1));
        match e.insert(sv(&[(0, 3), (1, 5)])) {
            Insert::Dependent(c) => {
                // 3*(first) + 2*(second) - (third) = 0 up to scaling
                let c0 = &c[&0];
                let c1 = &c[&1];
                let c2 = &c[&2];
                assert_eq!(c0 * BigInt::from(2), c1 * BigInt::from(3));
                assert_eq!(c0, &(-c2 * BigInt::from(3)));
            }
            other => panic!("{other:?}"),
        }
        assert!(e.contains(&sv(&[(0, 7), (1, 1)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn kernel_of_projection() {
        // columns: e0, 0, e0 + e1, e1
        let cols = vec![sv(&[(0, 1)]), SparseVec::new(), sv(&[(0, 1), (1, 1)]), sv(&[(1, 1)])];
        let k = kernel(&cols);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], sv(&[(1, 1)]));
        assert_eq!(k[1], sv(&[(0, 1), (2, -1), (3, 1)]));
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = sv(&[(0, 1_000_000_007), (1, 998_244_353)]);
        let other = sv(&[(0, 998_244_353), (1, 1_000_000_007)]);
        assert_eq!(rank(vec![big.clone(), other]), 2);
        let twice: SparseVec = big.iter().map(|(&k, x)| (k, x * BigInt::from(2))).collect();
        assert_eq!(rank(vec![big, twice]), 1);
    }
}
