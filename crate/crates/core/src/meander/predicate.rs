//! Recognising meander matrices.
//!
//! Two equivalent formulations are evaluated side by side. Both require a
//! full row `r` (the smallest one is used) and the ordered closure
//! conditions on the remaining indices relabelled `1..N` in order:
//! for `i < j < k`, `m_ij = m_jk = 1 ⇒ m_ik = 1` and
//! `m_ik = 1 ⇒ m_ij = 1 or m_jk = 1`. They differ in the parity part:
//!
//! * definition form: the three interlacement-matrix parity conditions;
//! * characterization form: `⟨m_i, m_j⟩ ≡ m_ij` for `i ≠ j` and
//!   `⟨m_i, m_i⟩ ≡ 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitmatrix::BitMatrix;
use crate::error::MatrixError;
use crate::realize::{matrix_conditions, ConditionViolation};

/// One failed condition. Indices refer to rows of the input matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum MeanderViolation {
    NoFullRow,
    /// `m_ij = m_jk = 1` but `m_ik = 0`, for `i < j < k` in line order.
    Transitivity {
        i: usize,
        j: usize,
        k: usize,
    },
    /// `m_ik = 1` but `m_ij = m_jk = 0`, for `i < j < k` in line order.
    Interval {
        i: usize,
        j: usize,
        k: usize,
    },
    /// A violated interlacement parity condition.
    Parity(ConditionViolation),
    /// `⟨m_i, m_j⟩ ≢ m_ij` (or `⟨m_i, m_i⟩` odd when `i = j`).
    Product {
        i: usize,
        j: usize,
        product: u32,
    },
}

impl fmt::Display for MeanderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanderViolation::NoFullRow => {
                f.write_str("no row is 1 in every off-diagonal position")
            }
            MeanderViolation::Transitivity { i, j, k } => {
                write!(f, "m{i}{j} = m{j}{k} = 1 but m{i}{k} = 0")
            }
            MeanderViolation::Interval { i, j, k } => {
                write!(f, "m{i}{k} = 1 but m{i}{j} = m{j}{k} = 0")
            }
            MeanderViolation::Parity(v) => v.fmt(f),
            MeanderViolation::Product { i, j, product } if i == j => {
                write!(f, "<m{i},m{i}> = {product} is odd")
            }
            MeanderViolation::Product { i, j, product } => {
                write!(f, "<m{i},m{j}> = {product} has the wrong parity")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeanderCheck {
    /// Smallest full row, if any.
    pub full_row: Option<usize>,
    pub definition: Vec<MeanderViolation>,
    pub characterization: Vec<MeanderViolation>,
}

impl MeanderCheck {
    /// Verdict of the definition form.
    pub fn holds(&self) -> bool {
        self.definition.is_empty()
    }

    pub fn characterization_holds(&self) -> bool {
        self.characterization.is_empty()
    }

    pub fn forms_agree(&self) -> bool {
        self.holds() == self.characterization_holds()
    }
}

/// Evaluates both formulations on a symmetric zero-diagonal matrix.
pub fn is_meander_matrix(m: &BitMatrix) -> Result<MeanderCheck, MatrixError> {
    m.check_symmetric_zero_diagonal()?;
    let full_row = m.full_rows().next();
    let mut shared = Vec::new();
    match full_row {
        None => shared.push(MeanderViolation::NoFullRow),
        Some(r) => shared.extend(closure_violations(m, r)),
    }
    let mut definition = shared.clone();
    definition.extend(
        matrix_conditions(m)?
            .violations
            .into_iter()
            .map(MeanderViolation::Parity),
    );
    let mut characterization = shared;
    characterization.extend(product_violations(m));
    Ok(MeanderCheck {
        full_row,
        definition,
        characterization,
    })
}

fn closure_violations(m: &BitMatrix, r: usize) -> Vec<MeanderViolation> {
    let line: Vec<usize> = (0..m.size()).filter(|&x| x != r).collect();
    let mut out = Vec::new();
    for (a, &i) in line.iter().enumerate() {
        for (b, &j) in line.iter().enumerate().skip(a + 1) {
            for &k in &line[b + 1..] {
                let (ij, jk, ik) = (m.get(i, j), m.get(j, k), m.get(i, k));
                if ij && jk && !ik {
                    out.push(MeanderViolation::Transitivity { i, j, k });
                }
                if ik && !ij && !jk {
                    out.push(MeanderViolation::Interval { i, j, k });
                }
            }
        }
    }
    out
}

fn product_violations(m: &BitMatrix) -> Vec<MeanderViolation> {
    let n = m.size();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let product = m.dot(i, j);
            if product % 2 != u32::from(m.get(i, j)) {
                out.push(MeanderViolation::Product { i, j, product });
            }
        }
    }
    out
}
