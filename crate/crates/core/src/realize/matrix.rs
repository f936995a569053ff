//! Realizability conditions phrased on the interlacement matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitmatrix::BitMatrix;
use crate::error::MatrixError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    Integer,
    Mod2,
}

/// `<m_{i1}, ..., m_{ik}> = Σ_t Π_j m_{ij t}`, the number of columns in
/// which every listed row has a 1. Repeated indices are allowed.
pub fn scalar_product(
    m: &BitMatrix,
    indices: &[usize],
    mode: ScalarMode,
) -> Result<u32, MatrixError> {
    let (&first, rest) = indices.split_first().ok_or(MatrixError::EmptyIndexSet)?;
    m.check_index(first)?;
    let mut acc = m.row(first);
    for &i in rest {
        m.check_index(i)?;
        acc &= m.row(i);
    }
    let count = acc.count_ones();
    Ok(match mode {
        ScalarMode::Integer => count,
        ScalarMode::Mod2 => count & 1,
    })
}

/// One failed parity condition. Indices are matrix rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum ConditionViolation {
    /// `<m_i, m_i>` is odd.
    SelfProduct { i: usize, product: u32 },
    /// `m_ij = 0` but `<m_i, m_j>` is odd.
    NonCrossingPair { i: usize, j: usize, product: u32 },
    /// `i, j, k` pairwise cross but `<m_i,m_j> + <m_i,m_k> + <m_j,m_k>` is even.
    Triangle {
        i: usize,
        j: usize,
        k: usize,
        sum: u32,
    },
}

impl ConditionViolation {
    /// 1, 2 or 3: which of the three parity conditions failed.
    pub fn number(&self) -> u8 {
        match self {
            ConditionViolation::SelfProduct { .. } => 1,
            ConditionViolation::NonCrossingPair { .. } => 2,
            ConditionViolation::Triangle { .. } => 3,
        }
    }
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionViolation::SelfProduct { i, product } => {
                write!(f, "(1) <m{i},m{i}> = {product} is odd")
            }
            ConditionViolation::NonCrossingPair { i, j, product } => {
                write!(f, "(2) m{i}{j} = 0 but <m{i},m{j}> = {product} is odd")
            }
            ConditionViolation::Triangle { i, j, k, sum } => {
                write!(
                    f,
                    "(3) rows {i},{j},{k} pairwise cross but the product sum {sum} is even"
                )
            }
        }
    }
}

/// Result of [`matrix_conditions`]: every violation, grouped by condition
/// and in index order within each group.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MatrixConditions {
    pub violations: Vec<ConditionViolation>,
}

impl MatrixConditions {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether condition `number` (1, 2 or 3) holds.
    pub fn condition_holds(&self, number: u8) -> bool {
        self.violations.iter().all(|v| v.number() != number)
    }
}

/// Checks the three parity conditions that the matrix of a realizable
/// diagram satisfies:
/// 1. `<m_i, m_i> ≡ 0`;
/// 2. `<m_i, m_j> ≡ 0` whenever `m_ij = 0`, `i ≠ j`;
/// 3. `<m_i,m_j> + <m_i,m_k> + <m_j,m_k> ≡ 1` for pairwise crossing `i, j, k`.
pub fn matrix_conditions(m: &BitMatrix) -> Result<MatrixConditions, MatrixError> {
    m.check_symmetric_zero_diagonal()?;
    let n = m.size();
    let mut violations = Vec::new();
    for i in 0..n {
        let product = m.dot(i, i);
        if product % 2 == 1 {
            violations.push(ConditionViolation::SelfProduct { i, product });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !m.get(i, j) {
                let product = m.dot(i, j);
                if product % 2 == 1 {
                    violations.push(ConditionViolation::NonCrossingPair { i, j, product });
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !m.get(i, j) {
                continue;
            }
            // k ranges over common neighbours of i and j above j
            let mut common = m.row(i) & m.row(j) & !((2u64 << j).wrapping_sub(1));
            if j == 63 {
                common = 0;
            }
            while common != 0 {
                let k = common.trailing_zeros() as usize;
                common &= common - 1;
                let sum = m.dot(i, j) + m.dot(i, k) + m.dot(j, k);
                if sum.is_multiple_of(2) {
                    violations.push(ConditionViolation::Triangle { i, j, k, sum });
                }
            }
        }
    }
    Ok(MatrixConditions { violations })
}
