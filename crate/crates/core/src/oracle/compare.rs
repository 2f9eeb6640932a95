use serde::{Deserialize, Serialize};

use super::predict::PredictedJK;
use crate::pencil::JKInvariants;
use crate::rep::RepSpec;

/// Computed invariants in the form of a prediction: counts of eigenvalues
/// instead of their defining polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputedSummary {
    pub horizontal: Vec<usize>,
    pub vertical: Vec<usize>,
    pub distinct_eigenvalues: usize,
    /// Set when every eigenvalue class carries the same block multiset.
    pub blocks_uniform: bool,
    /// The common block multiset when uniform, else empty.
    pub blocks_per_eigenvalue: Vec<usize>,
}

pub fn summarize(inv: &JKInvariants) -> ComputedSummary {
    let distinct = inv.jordan.iter().map(|e| e.class.degree()).sum();
    let first = inv.jordan.first().map(|e| e.sizes.clone()).unwrap_or_default();
    let uniform = inv.jordan.iter().all(|e| e.sizes == first);
    ComputedSummary {
        horizontal: inv.horizontal.clone(),
        vertical: inv.vertical.clone(),
        distinct_eigenvalues: distinct,
        blocks_uniform: uniform,
        blocks_per_eigenvalue: if uniform { first } else { Vec::new() },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub verdict: Verdict,
    pub discrepancies: Vec<String>,
}

/// Field-by-field comparison; every differing field is listed.
pub fn compare(pred: &PredictedJK, comp: &ComputedSummary) -> Comparison {
    let mut d = Vec::new();
    if pred.horizontal != comp.horizontal {
        d.push(format!("horizontal: predicted {:?}, computed {:?}", pred.horizontal, comp.horizontal));
    }
    if pred.vertical != comp.vertical {
        d.push(format!("vertical: predicted {:?}, computed {:?}", pred.vertical, comp.vertical));
    }
    if pred.jordan.distinct_eigenvalues != comp.distinct_eigenvalues {
        d.push(format!(
            "distinct_eigenvalues: predicted {}, computed {}",
            pred.jordan.distinct_eigenvalues, comp.distinct_eigenvalues
        ));
    }
    if pred.jordan.distinct_eigenvalues > 0 {
        if !comp.blocks_uniform {
            d.push("blocks_per_eigenvalue: computed eigenvalues carry different blocks".into());
        } else if pred.jordan.blocks_per_eigenvalue != comp.blocks_per_eigenvalue {
            d.push(format!(
                "blocks_per_eigenvalue: predicted {:?}, computed {:?}",
                pred.jordan.blocks_per_eigenvalue, comp.blocks_per_eigenvalue
            ));
        }
    }
    let verdict = if d.is_empty() { Verdict::Match } else { Verdict::Mismatch };
    Comparison { verdict, discrepancies: d }
}

/// One comparison of computed against predicted invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub spec: RepSpec,
    /// `"canonical"` or `"random:<seed>"`.
    pub pair_source: String,
    pub verdict: Verdict,
    pub discrepancies: Vec<String>,
    pub computed: JKInvariants,
    pub predicted: PredictedJK,
}

impl MatchReport {
    pub fn new(spec: RepSpec, pair_source: String, computed: JKInvariants, predicted: PredictedJK) -> Self {
        let c = compare(&predicted, &summarize(&computed));
        MatchReport { spec, pair_source, verdict: c.verdict, discrepancies: c.discrepancies, computed, predicted }
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}
