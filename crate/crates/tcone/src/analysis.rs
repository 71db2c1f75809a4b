//! The full per-semigroup pipeline and the consistency checks run on it.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polyring::MonomialOrder;
use crate::ring_invariants::{equality_chain_report, s_equals_r_crosscheck, GotoReport};
use crate::semigroup::NumericalSemigroup;
use crate::standard_basis::StandardBasis;
use crate::tangent_cone::TangentConeReport;
use crate::toric::{
    classify, d3_cm_fastpath, d4_gorenstein_fastpath, defining_ideal, special_element, BresinskyClass,
    Classification, SpecialElement,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub frobenius: i64,
    pub multiplicity: u64,
    pub apery: Vec<u64>,
    pub symmetric: bool,
    pub dagger_condition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub generators: Vec<u64>,
    pub order: String,
    pub semigroup: SemigroupSummary,
    pub defining_ideal: Vec<String>,
    pub complete_intersection: bool,
    pub standard_basis: Vec<String>,
    pub classification: Classification,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_element: Option<SpecialElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d3_cm_fastpath: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d4_gorenstein_fastpath: Option<bool>,
    pub tangent_cone: TangentConeReport,
    pub goto: GotoReport,
    /// Theorem-backed implications that failed; always empty unless there
    /// is a bug or a counterexample.
    pub violations: Vec<String>,
    /// Wall-clock time of the analysis; excluded from determinism checks.
    pub timing_us: u64,
}

impl AnalysisReport {
    pub fn new(g: &NumericalSemigroup, order: Option<MonomialOrder>) -> Result<Self> {
        let start = Instant::now();
        let d = g.embedding_dimension();
        let order = order.unwrap_or_else(|| MonomialOrder::default_for(d));
        let ideal = defining_ideal(g);
        let sb = StandardBasis::compute(&ideal.elements(), &order, g.generators())?;
        let ifi = sb.initial_form_ideal();
        let tangent_cone = TangentConeReport::from_parts(ideal.mu(), &ifi)?;
        let goto = equality_chain_report(g, &tangent_cone)?;
        let mut violations = goto.violations.clone();

        let classification = match classify(&ideal) {
            Ok(c) => c,
            Err(e) => {
                violations.push(format!("structure theorem does not apply: {e}"));
                Classification::Unclassified
            }
        };
        let special_element = special_element(&ideal, &classification).ok();
        let d3 = match &classification {
            Classification::Herzog(h) => Some(d3_cm_fastpath(h)),
            _ => None,
        };
        let d4 = match &classification {
            Classification::Bresinsky(b @ BresinskyClass::CaseIII { .. }) => d4_gorenstein_fastpath(b).ok(),
            _ => None,
        };

        let t = &tangent_cone;
        if !t.is_consistent() {
            violations.push(format!("tangent cone report is inconsistent: {t:?}"));
        }
        if let Some(fast) = d3 {
            if fast != t.is_cm {
                violations.push(format!("d=3 arithmetic CM test says {fast}, standard basis says {}", t.is_cm));
            }
        }
        if let (Some(fast), Some(gor)) = (d4, t.is_gorenstein) {
            if fast != gor {
                violations.push(format!("Case III Gorenstein test says {fast}, structural test says {gor}"));
            }
        }
        if d == 3 && !s_equals_r_crosscheck(g, t.is_cm)? {
            violations.push("s_Q = r_Q but the tangent cone is not Cohen-Macaulay".into());
        }
        let symmetric = g.is_symmetric();
        let dagger = g.dagger_condition();
        if symmetric && t.is_cm {
            if let Some(gor) = t.is_gorenstein {
                if gor != dagger {
                    violations.push(format!("symmetric CM: Gorenstein = {gor} but pairing condition = {dagger}"));
                }
            }
        }
        if d == 4 && symmetric && ideal.mu() > 5 {
            violations.push(format!("symmetric with {} relations", ideal.mu()));
        }
        if d == 4 && symmetric && t.is_gorenstein == Some(true) && !ideal.is_complete_intersection() && t.mu_istar != 5 {
            violations.push(format!("Gorenstein tangent cone with mu(I*) = {}", t.mu_istar));
        }
        if !goto.inequalities_hold() {
            violations.push("Goto-number inequalities fail".into());
        }

        Ok(AnalysisReport {
            schema_version: SCHEMA_VERSION,
            generators: g.generators().to_vec(),
            order: order.render(),
            semigroup: SemigroupSummary {
                frobenius: g.frobenius(),
                multiplicity: g.multiplicity(),
                apery: g.apery_multiplicity().elements,
                symmetric,
                dagger_condition: dagger,
            },
            defining_ideal: ideal.render(),
            complete_intersection: ideal.is_complete_intersection(),
            standard_basis: sb.generators.iter().map(ToString::to_string).collect(),
            classification,
            special_element,
            d3_cm_fastpath: d3,
            d4_gorenstein_fastpath: d4,
            tangent_cone,
            goto,
            violations,
            timing_us: start.elapsed().as_micros() as u64,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::error::Error::Parse(e.to_string()))
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let t = &self.tangent_cone;
        let g = &self.goto;
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let gens: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        out += &format!("G = <{}>\n", gens.join(","));
        out += &format!(
            "frobenius {}  multiplicity {}  symmetric {}\n",
            self.semigroup.frobenius,
            self.semigroup.multiplicity,
            yes(self.semigroup.symmetric)
        );
        out += &format!("I ({} generators):\n", self.defining_ideal.len());
        for s in &self.defining_ideal {
            out += &format!("  {s}\n");
        }
        out += &format!("I* ({} generators, order {}):\n", t.mu_istar, self.order);
        for s in &t.istar_generators {
            out += &format!("  {s}\n");
        }
        out += &format!(
            "Cohen-Macaulay {}  H0 length {}  Buchsbaum level {}  Gorenstein {}\n",
            yes(t.is_cm),
            t.h0_length,
            t.buchsbaum_level,
            t.is_gorenstein.map_or("unknown", yes)
        );
        out += &format!(
            "s_Q {}  r_Q {}  ord(C) {}  g(t^n1) {}  g(t^(f+n1+1)) {}  ord(f+n1) {}\n",
            g.s_q, g.r_q, g.conductor_order, g.chain.goto_n1, g.goto_special, g.chain.ord_special
        );
        for v in &self.violations {
            out += &format!("VIOLATION: {v}\n");
        }
        out
    }
}
