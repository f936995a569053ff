//! Square matrices over Z2 with one `u64` word per row.
//!
//! Row `i` stores column `j` in bit `j`, so the scalar product of two rows is
//! a single AND followed by a popcount.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::MatrixError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    size: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    pub const MAX_SIZE: usize = 64;

    pub fn zeros(size: usize) -> Result<Self, MatrixError> {
        if size > Self::MAX_SIZE {
            return Err(MatrixError::TooLarge {
                size,
                max: Self::MAX_SIZE,
            });
        }
        Ok(Self {
            size,
            rows: vec![0; size],
        })
    }

    pub fn from_fn(
        size: usize,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, MatrixError> {
        let mut m = Self::zeros(size)?;
        for i in 0..size {
            for j in 0..size {
                if f(i, j) {
                    m.rows[i] |= 1 << j;
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from rows of 0/1 integers. Only squareness and the
    /// 0/1 alphabet are checked here.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let size = rows.len();
        let mut m = Self::zeros(size)?;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != size {
                return Err(MatrixError::NotSquare {
                    row: i,
                    len: row.len(),
                    size,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.rows[i] |= 1 << j,
                    _ => {
                        return Err(MatrixError::NotBinary {
                            row: i,
                            col: j,
                            value: v,
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_symmetric(&mut self, i: usize, j: usize, value: bool) {
        self.set(i, j, value);
        self.set(j, i, value);
    }

    /// The packed row `m_i`.
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// `<m_i, m_j>` as an integer.
    pub fn dot(&self, i: usize, j: usize) -> u32 {
        (self.rows[i] & self.rows[j]).count_ones()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    pub fn check_index(&self, index: usize) -> Result<(), MatrixError> {
        if index < self.size {
            Ok(())
        } else {
            Err(MatrixError::IndexOutOfRange {
                index,
                size: self.size,
            })
        }
    }

    /// Fails with the first asymmetric pair or nonzero diagonal entry, scanning rows in order.
    pub fn check_symmetric_zero_diagonal(&self) -> Result<(), MatrixError> {
        for i in 0..self.size {
            if self.get(i, i) {
                return Err(MatrixError::NonzeroDiagonal(i));
            }
            for j in i + 1..self.size {
                if self.get(i, j) != self.get(j, i) {
                    return Err(MatrixError::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    /// Whether row `i` has a 1 in every off-diagonal position.
    pub fn is_full_row(&self, i: usize) -> bool {
        let all = if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        };
        self.rows[i] | (1 << i) == all
    }

    pub fn full_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&i| self.is_full_row(i))
    }

    /// The matrix with rows and columns reordered: entry `(a, b)` of the
    /// result is entry `(order[a], order[b])` of `self`. `order` may be a
    /// strict subset of the indices.
    pub fn select(&self, order: &[usize]) -> BitMatrix {
        let mut out = BitMatrix {
            size: order.len(),
            rows: vec![0; order.len()],
        };
        for (a, &oa) in order.iter().enumerate() {
            for (b, &ob) in order.iter().enumerate() {
                if self.get(oa, ob) {
                    out.rows[a] |= 1 << b;
                }
            }
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.size, self.size)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let line: Vec<&str> = (0..self.size)
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// JSON form `{"size": k, "rows": [[0|1, ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub size: usize,
    pub rows: Vec<Vec<i64>>,
}

impl From<&BitMatrix> for MatrixRecord {
    fn from(m: &BitMatrix) -> Self {
        Self {
            size: m.size,
            rows: m
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(i64::from).collect())
                .collect(),
        }
    }
}

impl TryFrom<&MatrixRecord> for BitMatrix {
    type Error = MatrixError;

    fn try_from(r: &MatrixRecord) -> Result<Self, MatrixError> {
        if r.size != r.rows.len() {
            return Err(MatrixError::SizeMismatch {
                declared: r.size,
                actual: r.rows.len(),
            });
        }
        BitMatrix::from_rows(&r.rows)
    }
}
