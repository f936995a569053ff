//! Differential sweep of the smoothing criterion against the oracle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::LimitExceeded;
use crate::gauss::{enumerate_codes_with, ChordDiagram};
use crate::limits::Limits;
use crate::realize::even::{theorem34_realizable, Verdict, Witness};
use crate::realize::oracle::oracle_realizable_with;

/// A code on which the two deciders disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub code: String,
    pub thm34: Verdict,
    pub oracle: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AuditSummary {
    /// `(n, number of codes checked)` for each size swept.
    pub checked: Vec<(usize, usize)>,
    /// Disagreements ordered by size, then by canonical word.
    pub disagreements: Vec<AuditRecord>,
}

impl AuditSummary {
    pub fn total_checked(&self) -> usize {
        self.checked.iter().map(|&(_, c)| c).sum()
    }

    /// The first disagreement at the smallest size.
    pub fn minimal_counterexample(&self) -> Option<&AuditRecord> {
        self.disagreements.first()
    }
}

/// Compares both deciders on every canonical code with `min_n ≤ n ≤ max_n`
/// in which every chord crosses another.
pub fn audit(min_n: usize, max_n: usize, limits: &Limits) -> Result<AuditSummary, LimitExceeded> {
    if max_n > limits.oracle {
        return Err(LimitExceeded {
            what: "oracle chord count",
            value: max_n,
            max: limits.oracle,
        });
    }
    let mut summary = AuditSummary::default();
    for n in min_n..=max_n {
        let codes: Vec<_> = enumerate_codes_with(n, true, limits)?.collect();
        let mut found: Vec<AuditRecord> = codes
            .par_iter()
            .filter_map(|canon| {
                let code = canon.code();
                let d = ChordDiagram::new(code.clone()).expect("enumerated codes are small");
                let report = theorem34_realizable(&d);
                let oracle = oracle_realizable_with(code, limits.oracle)
                    .expect("size checked above")
                    .verdict();
                (report.verdict != oracle).then(|| AuditRecord {
                    code: code.to_string(),
                    thm34: report.verdict,
                    oracle,
                    witness: report.witness,
                })
            })
            .collect();
        found.sort_by(|a, b| a.code.cmp(&b.code));
        summary.checked.push((n, codes.len()));
        summary.disagreements.extend(found);
    }
    Ok(summary)
}
