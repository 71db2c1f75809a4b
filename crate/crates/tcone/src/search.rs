//! Exhaustive runs over all minimally generated semigroups below a bound.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::AnalysisReport;
use crate::error::{Error, Result};
use crate::semigroup::{enumerate_semigroups, NumericalSemigroup};
use crate::tangent_cone::{self, TangentConeReport};
use crate::toric::defining_ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Record the largest numbers of relations (open question: at most 13?).
    Mu13,
    /// Gorenstein tangent cone forces the Goto / reduction-number chain.
    GorensteinChain,
    /// Symmetric and Cohen-Macaulay: Gorenstein iff the pairing condition.
    Dagger,
    /// Buchsbaum iff the H^0 length is at most one, and relatives.
    Buchsbaum,
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mu13" => Ok(Check::Mu13),
            "gorenstein-chain" => Ok(Check::GorensteinChain),
            "dagger" => Ok(Check::Dagger),
            "buchsbaum" => Ok(Check::Buchsbaum),
            _ => Err(Error::Parse(format!("unknown check {s:?}"))),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Mu13 => "mu13",
            Check::GorensteinChain => "gorenstein-chain",
            Check::Dagger => "dagger",
            Check::Buchsbaum => "buchsbaum",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub dim: usize,
    pub max_gen: u64,
    pub check: Check,
    pub symmetric_only: bool,
    /// Keep only generators that admit a labelling with `n1 + n2 = n3 + n4`.
    pub bresinsky_d5_filter: bool,
}

/// Largest `max_gen` accepted per embedding dimension.
pub fn cap(dim: usize) -> u64 {
    match dim {
        3 => 120,
        4 => 60,
        _ => 40,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRow {
    pub generators: String,
    pub symmetric: bool,
    pub mu_i: usize,
    pub mu_istar: usize,
    pub is_cm: bool,
    pub h0_length: usize,
    pub buchsbaum_level: usize,
    /// Empty when undecided.
    pub gorenstein: String,
    pub violation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub options: SearchOptions,
    pub examined: usize,
    pub max_mu_i: usize,
    pub max_mu_istar: usize,
    pub max_mu_i_symmetric: usize,
    pub max_mu_i_gorenstein: usize,
    pub max_mu_istar_gorenstein: usize,
    pub violations: Vec<SearchRow>,
    pub rows: Vec<SearchRow>,
}

impl SearchSummary {
    /// The bound of 13 relations was exceeded by a symmetric semigroup, or
    /// by `I*` of a Gorenstein tangent cone.
    pub fn exceeds_thirteen(&self) -> bool {
        self.max_mu_i_symmetric > 13 || self.max_mu_istar_gorenstein > 13
    }
}

fn candidates(opts: &SearchOptions) -> Vec<Vec<u64>> {
    enumerate_semigroups(opts.dim, opts.max_gen)
        .into_iter()
        .filter(|g| !opts.bresinsky_d5_filter || has_balanced_pairs(g))
        .collect()
}

/// Two disjoint pairs of generators with equal sums, i.e. the generators can
/// be labelled so that `n1 + n2 = n3 + n4`. Sorted labels never satisfy it.
pub fn has_balanced_pairs(g: &[u64]) -> bool {
    let d = g.len();
    (0..d).any(|i| {
        (i + 1..d).any(|j| {
            (0..d)
                .filter(|&k| k != i && k != j)
                .any(|k| (k + 1..d).any(|l| l != i && l != j && g[i] + g[j] == g[k] + g[l]))
        })
    })
}

/// Gorenstein verdict: structural for `d <= 4`; beyond that only through
/// the pairing criterion, which is equivalent for symmetric semigroups with
/// Cohen-Macaulay tangent cone.
fn gorenstein(g: &NumericalSemigroup, t: &TangentConeReport) -> Option<bool> {
    t.is_gorenstein.or_else(|| {
        if !t.is_cm || !g.is_symmetric() {
            Some(false)
        } else {
            Some(g.dagger_condition())
        }
    })
}

fn buchsbaum_violations(t: &TangentConeReport, ifi: &crate::standard_basis::InitialFormIdeal) -> Vec<String> {
    let mut v = Vec::new();
    let (lvl, len) = (t.buchsbaum_level, t.h0_length);
    if (lvl <= 1) != (len <= 1) {
        v.push(format!("Buchsbaum level {lvl} with H0 length {len}"));
    }
    if (lvl <= 2) != (len <= 2) {
        v.push(format!("2-Buchsbaum mismatch: level {lvl}, length {len}"));
    }
    if lvl == 1 && t.mu_istar != 4 {
        v.push(format!("Buchsbaum, not CM, mu(I*) = {}", t.mu_istar));
    }
    if lvl == 2 && t.mu_istar > 4 {
        v.push(format!("2-Buchsbaum with mu(I*) = {}", t.mu_istar));
    }
    if !t.is_cm {
        // H^0 is generated by one power of x3
        let basis = tangent_cone::h0_basis(ifi);
        let lowest = basis
            .iter()
            .filter_map(|p| p.terms().next().map(|(m, _)| m.clone()))
            .min_by_key(|m| m.degree());
        match lowest {
            Some(m) if m.pure_power().map(|p| p.0) == Some(2) => {
                let gen = crate::polyring::Polynomial::from_int(m, 1);
                if !generates(ifi, &gen, &basis) {
                    v.push("H0 is not generated by its lowest x3-power".into());
                }
            }
            _ => v.push("lowest H0 element is not a power of x3".into()),
        }
    }
    v
}

/// Whether `R·gen` contains every element of `basis` modulo `I*`.
fn generates(
    ifi: &crate::standard_basis::InitialFormIdeal,
    gen: &crate::polyring::Polynomial,
    basis: &[crate::polyring::Polynomial],
) -> bool {
    use crate::polyring::monomials_of_degree;
    use std::collections::BTreeSet;
    let gm = gen.terms().next().unwrap().0.clone();
    // every basis element is a multiple of gen modulo I*: compare monomial
    // supports, since both sides are spanned by standard monomials here
    let mut reach: BTreeSet<crate::polyring::Monomial> = BTreeSet::new();
    let top = basis
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.degree()))
        .max()
        .unwrap_or(0);
    for k in 0..=top.saturating_sub(gm.degree()) {
        for m in monomials_of_degree(ifi.dim(), k) {
            if let Some(r) = ifi.normal_form(&m.mul(&gm)) {
                reach.insert(r);
            }
        }
    }
    basis.iter().all(|p| p.terms().all(|(m, _)| reach.contains(m)))
}

fn examine(gens: &[u64], opts: &SearchOptions) -> Result<Option<SearchRow>> {
    let g = NumericalSemigroup::new(gens)?;
    let symmetric = g.is_symmetric();
    if opts.symmetric_only && !symmetric {
        return Ok(None);
    }
    let label = gens.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let mut violation = Vec::new();
    let (t, gor) = match opts.check {
        Check::GorensteinChain | Check::Dagger if opts.dim <= 4 => {
            let r = AnalysisReport::new(&g, None)?;
            violation.extend(r.violations.iter().cloned());
            let t = r.tangent_cone;
            let gor = t.is_gorenstein;
            (t, gor)
        }
        _ => {
            let ideal = defining_ideal(&g);
            let ifi = tangent_cone::initial_form_ideal(&g, None)?;
            let t = TangentConeReport::from_parts(ideal.mu(), &ifi)?;
            if opts.check == Check::Buchsbaum && opts.dim == 3 {
                violation.extend(buchsbaum_violations(&t, &ifi));
            }
            if opts.check == Check::Dagger && symmetric && t.is_cm {
                if let Some(gor) = t.is_gorenstein {
                    if gor != g.dagger_condition() {
                        violation.push("Gorenstein differs from the pairing condition".into());
                    }
                }
            }
            let gor = gorenstein(&g, &t);
            (t, gor)
        }
    };
    Ok(Some(SearchRow {
        generators: label,
        symmetric,
        mu_i: t.mu_i,
        mu_istar: t.mu_istar,
        is_cm: t.is_cm,
        h0_length: t.h0_length,
        buchsbaum_level: t.buchsbaum_level,
        gorenstein: gor.map_or(String::new(), |b| b.to_string()),
        violation: violation.join("; "),
    }))
}

pub fn search(opts: &SearchOptions) -> Result<SearchSummary> {
    if !(3..=5).contains(&opts.dim) {
        return Err(Error::DimensionUnsupported(opts.dim));
    }
    if opts.max_gen > cap(opts.dim) {
        return Err(Error::CapExceeded {
            what: "max_gen",
            value: opts.max_gen,
            cap: cap(opts.dim),
        });
    }
    let list = candidates(opts);
    let rows: Vec<SearchRow> = list
        .par_iter()
        .map(|g| examine(g, opts))
        .collect::<Result<Vec<Option<SearchRow>>>>()?
        .into_iter()
        .flatten()
        .collect();
    let gor_rows = || rows.iter().filter(|r| r.gorenstein == "true");
    Ok(SearchSummary {
        options: opts.clone(),
        examined: rows.len(),
        max_mu_i: rows.iter().map(|r| r.mu_i).max().unwrap_or(0),
        max_mu_istar: rows.iter().map(|r| r.mu_istar).max().unwrap_or(0),
        max_mu_i_symmetric: rows.iter().filter(|r| r.symmetric).map(|r| r.mu_i).max().unwrap_or(0),
        max_mu_i_gorenstein: gor_rows().map(|r| r.mu_i).max().unwrap_or(0),
        max_mu_istar_gorenstein: gor_rows().map(|r| r.mu_istar).max().unwrap_or(0),
        violations: rows.iter().filter(|r| !r.violation.is_empty()).cloned().collect(),
        rows,
    })
}
