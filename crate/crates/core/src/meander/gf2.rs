//! Affine expressions and linear systems over GF(2) with up to 256 variables.

use std::fmt;

pub(crate) const MAX_VARS: usize = 256;

/// A set of variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub(crate) struct Bits([u64; 4]);

impl Bits {
    pub fn single(v: usize) -> Self {
        let mut b = Self::default();
        b.toggle(v);
        b
    }

    pub fn get(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn toggle(&mut self, v: usize) {
        self.0[v / 64] ^= 1 << (v % 64);
    }

    pub fn xor(&mut self, other: &Bits) {
        for k in 0..4 {
            self.0[k] ^= other.0[k];
        }
    }

    pub fn union(&mut self, other: &Bits) {
        for k in 0..4 {
            self.0[k] |= other.0[k];
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Set variables in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).flat_map(move |k| crate::gauss::bits(self.0[k]).map(move |b| 64 * k + b))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `c + Σ_{v ∈ vars} x_v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub(crate) struct Affine {
    pub vars: Bits,
    pub c: bool,
}

impl Affine {
    pub fn constant(c: bool) -> Self {
        Self {
            vars: Bits::default(),
            c,
        }
    }

    pub fn var(v: usize) -> Self {
        Self {
            vars: Bits::single(v),
            c: false,
        }
    }

    pub fn as_const(&self) -> Option<bool> {
        self.vars.is_empty().then_some(self.c)
    }

    pub fn add(&mut self, other: &Affine) {
        self.vars.xor(&other.vars);
        self.c ^= other.c;
    }
}

/// `Σ_{v ∈ vars} x_v = rhs`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Equation {
    pub vars: Bits,
    pub rhs: bool,
}

impl Equation {
    /// The equation `e = 0`.
    pub fn zero(e: Affine) -> Self {
        Self {
            vars: e.vars,
            rhs: e.c,
        }
    }
}

/// Solution of a consistent system in reduced row echelon form: each pivot
/// variable equals an affine expression in free variables.
#[derive(Clone, Debug, Default)]
pub(crate) struct Solution {
    pivot: Vec<Option<Affine>>,
}

impl Solution {
    pub fn unconstrained(vars: usize) -> Self {
        Self {
            pivot: vec![None; vars],
        }
    }

    pub fn is_pivot(&self, v: usize) -> bool {
        self.pivot[v].is_some()
    }

    /// Value of `x_v` in terms of free variables.
    pub fn value(&self, v: usize) -> Affine {
        self.pivot[v].unwrap_or_else(|| Affine::var(v))
    }
}

/// Gauss-Jordan elimination taking pivot columns in `priority` order.
/// Variables with `fixed[v] = Some(b)` are substituted first. Returns `None`
/// when the system is inconsistent.
pub(crate) fn solve(
    equations: &[Equation],
    fixed: &[Option<bool>],
    priority: &[usize],
) -> Option<Solution> {
    let mut rows: Vec<Equation> = Vec::with_capacity(equations.len());
    for eq in equations {
        let mut e = *eq;
        for v in eq.vars.iter() {
            if let Some(b) = fixed[v] {
                e.vars.toggle(v);
                e.rhs ^= b;
            }
        }
        if e.vars.is_empty() {
            if e.rhs {
                return None;
            }
            continue;
        }
        rows.push(e);
    }
    let mut solution = Solution::unconstrained(fixed.len());
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for &col in priority {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].vars.get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.vars.get(col) {
                row.vars.xor(&pivot_row.vars);
                row.rhs ^= pivot_row.rhs;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| r.rhs) {
        return None;
    }
    for (r, &col) in pivots.iter().enumerate() {
        let mut vars = rows[r].vars;
        vars.toggle(col);
        solution.pivot[col] = Some(Affine {
            vars,
            c: rows[r].rhs,
        });
    }
    Some(solution)
}
