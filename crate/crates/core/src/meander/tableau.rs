//! The step-by-step construction tableau.
//!
//! Cells `(i, j)` with `1 ≤ i < j ≤ N` are GF(2) variables, one per cell,
//! numbered row by row. Row 0 is all ones and the diagonal is zero.
//!
//! Choosing a row `m` Δ-fills it: every cell `(m, j)` whose other index `j`
//! has not been chosen yet becomes `0` for `j < m` and `1` for `j > m`. A cell
//! whose other index was chosen earlier already holds the value written by
//! that earlier choice, so once all rows are chosen the grid is constant.
//!
//! Propagation collects the parity equations `⟨m_i, m_j⟩ = m_ij` (`i ≠ j`)
//! and `⟨m_i, m_i⟩ = 0` whose products are linear under the current solution,
//! solves them, and repeats until no new equation appears. A product `e·f`
//! is linear when either factor is constant, when `e = f` (giving `e`), or
//! when `e = f + 1` (giving `0`). Equations are stored over the raw cell
//! variables, so each one stays valid as further rows are chosen.
//!
//! Free variables receive names `a, b, c, ...` the first time they appear in
//! an equation, walking the equations in the order they were found. Pivots
//! are taken among unnamed variables first, in cell order, and then among
//! named ones from newest to oldest, so named unknowns stay free as long as
//! the equations allow. A name whose variable becomes determined is retired.

use std::collections::HashSet;
use std::fmt;

use crate::bitmatrix::BitMatrix;
use crate::error::{DeltaFillError, MeanderError};
use crate::gauss::letter_label;
use crate::meander::gf2::{self, Affine, Bits, Equation, Solution};
use crate::meander::predicate::is_meander_matrix;
use crate::meander::reconstruct::visitation_of;
use crate::meander::EnumeratedMeander;

/// Residual unknowns beyond this count are not expanded by [`PartialMeanderMatrix::completions`].
pub const MAX_RESIDUAL_UNKNOWNS: usize = 20;

/// Contents of one tableau cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    /// Not yet constrained by any equation.
    Empty,
    Const(bool),
    /// `constant + Σ unknowns`, at least one unknown.
    Expr {
        constant: bool,
        unknowns: Vec<String>,
    },
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Empty => Ok(()),
            Cell::Const(b) => write!(f, "{}", u8::from(*b)),
            Cell::Expr { constant, unknowns } => {
                if *constant {
                    f.write_str("1+")?;
                }
                f.write_str(&unknowns.join("+"))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum Propagation {
    Feasible(PartialMeanderMatrix),
    Infeasible,
}

impl Propagation {
    pub fn feasible(self) -> Option<PartialMeanderMatrix> {
        match self {
            Propagation::Feasible(p) => Some(p),
            Propagation::Infeasible => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Propagation::Feasible(_))
    }
}

#[derive(Debug, Clone)]
pub struct PartialMeanderMatrix {
    n: usize,
    fixed: Vec<Option<bool>>,
    visitation: Vec<usize>,
    equations: Vec<Equation>,
    known: HashSet<Equation>,
    touched: Bits,
    solution: Solution,
    names: Vec<Option<usize>>,
    next_name: usize,
}

impl PartialMeanderMatrix {
    /// Largest supported `N`: the `N(N-1)/2` cell variables must fit in 256.
    pub const MAX_N: usize = 22;

    /// Empty `(N+1) × (N+1)` tableau with zero diagonal and row 0 filled.
    pub fn new(n: usize) -> Result<Self, MeanderError> {
        if n < 2 || n % 2 == 1 {
            return Err(MeanderError::InvalidN(n));
        }
        if n > Self::MAX_N {
            return Err(crate::error::LimitExceeded {
                what: "tableau size N",
                value: n,
                max: Self::MAX_N,
            }
            .into());
        }
        let vars = n * (n - 1) / 2;
        debug_assert!(vars <= gf2::MAX_VARS);
        Ok(Self {
            n,
            fixed: vec![None; vars],
            visitation: Vec::new(),
            equations: Vec::new(),
            known: HashSet::new(),
            touched: Bits::default(),
            solution: Solution::unconstrained(vars),
            names: vec![None; vars],
            next_name: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn visitation(&self) -> &[usize] {
        &self.visitation
    }

    fn is_chosen(&self, i: usize) -> bool {
        self.visitation.contains(&i)
    }

    pub fn is_delta_filled(&self, i: usize) -> bool {
        i == 0 || self.is_chosen(i)
    }

    /// `S₁`: odd rows not chosen yet.
    pub fn s1(&self) -> Vec<usize> {
        (1..=self.n)
            .step_by(2)
            .filter(|&i| !self.is_chosen(i))
            .collect()
    }

    /// `S₀`: even rows not chosen yet.
    pub fn s0(&self) -> Vec<usize> {
        (2..=self.n)
            .step_by(2)
            .filter(|&i| !self.is_chosen(i))
            .collect()
    }

    /// Rows that may be chosen next: odd first, then alternating parity.
    pub fn candidates(&self) -> Vec<usize> {
        match self.visitation.last() {
            None => self.s1(),
            Some(p) if p % 2 == 1 => self.s0(),
            Some(_) => self.s1(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.visitation.len() == self.n
    }

    fn var(&self, i: usize, j: usize) -> Option<usize> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if i == 0 || i == j {
            return None;
        }
        let n = self.n;
        Some((i - 1) * n - (i - 1) * i / 2 + (j - i - 1))
    }

    fn cell_of_var(&self, v: usize) -> (usize, usize) {
        for i in 1..self.n {
            for j in i + 1..=self.n {
                if self.var(i, j) == Some(v) {
                    return (i, j);
                }
            }
        }
        unreachable!("variable {v} out of range")
    }

    /// Substitutes fixed cells into `e`.
    fn resolve(&self, mut e: Affine) -> Affine {
        for v in e.vars.iter().collect::<Vec<_>>() {
            if let Some(b) = self.fixed[v] {
                e.vars.toggle(v);
                e.c ^= b;
            }
        }
        e
    }

    /// Current value of cell `(i, j)` in terms of free variables.
    fn value(&self, i: usize, j: usize) -> Affine {
        if i == j {
            return Affine::constant(false);
        }
        match self.var(i, j) {
            None => Affine::constant(true),
            Some(v) => match self.fixed[v] {
                Some(b) => Affine::constant(b),
                None => self.resolve(self.solution.value(v)),
            },
        }
    }

    /// Cell `(i, j)` as an unknown of its own, or its constant when fixed.
    fn raw(&self, i: usize, j: usize) -> Affine {
        if i == j {
            return Affine::constant(false);
        }
        match self.var(i, j) {
            None => Affine::constant(true),
            Some(v) => match self.fixed[v] {
                Some(b) => Affine::constant(b),
                None => Affine::var(v),
            },
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> Cell {
        assert!(
            i <= self.n && j <= self.n,
            "cell ({i}, {j}) outside the tableau"
        );
        if let Some(v) = self.var(i, j) {
            if self.fixed[v].is_none() && !self.solution.is_pivot(v) && !self.touched.get(v) {
                return Cell::Empty;
            }
        }
        let e = self.value(i, j);
        match e.as_const() {
            Some(b) => Cell::Const(b),
            None => Cell::Expr {
                constant: e.c,
                unknowns: e.vars.iter().map(|v| self.var_name(v)).collect(),
            },
        }
    }

    fn var_name(&self, v: usize) -> String {
        match self.names[v] {
            Some(k) => letter_label(k),
            None => {
                let (i, j) = self.cell_of_var(v);
                format!("x{i}_{j}")
            }
        }
    }

    /// Δ-fills row and column `index`.
    pub fn delta_fill(&self, index: usize) -> Result<Self, DeltaFillError> {
        if index == 0 || index > self.n {
            return Err(DeltaFillError::OutOfRange(index, self.n));
        }
        if self.is_chosen(index) {
            return Err(DeltaFillError::AlreadyChosen(index));
        }
        let previous = self.visitation.last().copied();
        let parity_ok = match previous {
            None => index % 2 == 1,
            Some(p) => p % 2 != index % 2,
        };
        if !parity_ok {
            return Err(DeltaFillError::ParityViolation { index, previous });
        }
        let mut next = self.clone();
        for j in 1..=self.n {
            if j != index && !self.is_chosen(j) {
                let v = self.var(index, j).expect("off-diagonal cell");
                next.fixed[v] = Some(j > index);
            }
        }
        next.visitation.push(index);
        Ok(next)
    }

    /// Δ-fills `index` and propagates; `None` when either step rejects it.
    pub fn choose(&self, index: usize) -> Option<Self> {
        self.delta_fill(index).ok()?.propagate().feasible()
    }

    /// Order in which rows contribute equations: chosen rows newest first,
    /// then row 0, then the remaining rows ascending.
    fn row_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.visitation.iter().rev().copied().collect();
        order.push(0);
        order.extend((1..=self.n).filter(|&i| !self.is_chosen(i)));
        order
    }

    /// `⟨m_i, m_j⟩ + m_ij = 0` (or `⟨m_i, m_i⟩ = 0`), if every product is
    /// linear under the current solution.
    fn parity_equation(&self, i: usize, j: usize) -> Option<Equation> {
        let mut acc = Affine::default();
        for t in 0..=self.n {
            if i == j {
                acc.add(&self.raw(i, t));
                continue;
            }
            let (e, f) = (self.value(i, t), self.value(j, t));
            match (e.as_const(), f.as_const()) {
                (Some(false), _) | (_, Some(false)) => {}
                (Some(true), _) => acc.add(&self.raw(j, t)),
                (_, Some(true)) => acc.add(&self.raw(i, t)),
                _ if e == f => acc.add(&self.raw(i, t)),
                _ if e.vars == f.vars => {}
                _ => return None,
            }
        }
        if i != j {
            acc.add(&self.raw(i, j));
        }
        Some(Equation::zero(acc))
    }

    fn generate(&self) -> Vec<Equation> {
        let size = self.n + 1;
        let mut done = vec![false; size * size];
        let mut out = Vec::new();
        for i in self.row_order() {
            for j in (i + 1..size).chain(0..i) {
                let key = i.min(j) * size + i.max(j);
                if done[key] {
                    continue;
                }
                done[key] = true;
                out.extend(self.parity_equation(i, j));
            }
            out.extend(self.parity_equation(i, i));
        }
        out
    }

    fn priority(&self) -> Vec<usize> {
        let vars = self.fixed.len();
        let mut order: Vec<usize> = (0..vars)
            .filter(|&v| self.fixed[v].is_none() && self.names[v].is_none())
            .collect();
        let mut named: Vec<(usize, usize)> = (0..vars)
            .filter(|&v| self.fixed[v].is_none())
            .filter_map(|v| self.names[v].map(|k| (k, v)))
            .collect();
        named.sort_unstable_by(|a, b| b.cmp(a));
        order.extend(named.into_iter().map(|(_, v)| v));
        order
    }

    /// Solves the parity equations to a fixpoint.
    pub fn propagate(&self) -> Propagation {
        let mut st = self.clone();
        loop {
            let Some(solution) = gf2::solve(&st.equations, &st.fixed, &st.priority()) else {
                return Propagation::Infeasible;
            };
            st.solution = solution;
            let mut added = false;
            for eq in st.generate() {
                if eq.vars.is_empty() {
                    if eq.rhs {
                        return Propagation::Infeasible;
                    }
                    continue;
                }
                if st.known.insert(eq) {
                    st.touched.union(&eq.vars);
                    st.equations.push(eq);
                    added = true;
                }
            }
            if !added {
                break;
            }
        }
        st.name_free_variables();
        Propagation::Feasible(st)
    }

    fn name_free_variables(&mut self) {
        for k in 0..self.equations.len() {
            for v in self.equations[k].vars.iter() {
                if self.fixed[v].is_none() && !self.solution.is_pivot(v) && self.names[v].is_none()
                {
                    self.names[v] = Some(self.next_name);
                    self.next_name += 1;
                }
            }
        }
    }

    /// Named unknowns that are still free, in naming order.
    pub fn unknowns(&self) -> Vec<String> {
        let mut named: Vec<(usize, usize)> = (0..self.fixed.len())
            .filter(|&v| self.fixed[v].is_none() && !self.solution.is_pivot(v))
            .filter_map(|v| self.names[v].map(|k| (k, v)))
            .collect();
        named.sort_unstable();
        named.into_iter().map(|(k, _)| letter_label(k)).collect()
    }

    /// The grid as a matrix once every cell is constant.
    pub fn to_matrix(&self) -> Option<BitMatrix> {
        let size = self.n + 1;
        let mut m = BitMatrix::zeros(size).expect("N is bounded by MAX_N");
        for i in 0..size {
            for j in i + 1..size {
                m.set_symmetric(i, j, self.value(i, j).as_const()?);
            }
        }
        Some(m)
    }

    /// Every meander matrix obtained by assigning the remaining free
    /// unknowns, ordered by visitation sequence.
    pub fn completions(&self) -> Result<Vec<EnumeratedMeander>, MeanderError> {
        let size = self.n + 1;
        let free: Vec<usize> = (0..self.fixed.len())
            .filter(|&v| self.fixed[v].is_none() && !self.solution.is_pivot(v))
            .collect();
        if free.len() > MAX_RESIDUAL_UNKNOWNS {
            return Err(MeanderError::TooManyUnknowns(free.len()));
        }
        let mut out = Vec::new();
        for mask in 0u64..1 << free.len() {
            let mut assigned = self.fixed.clone();
            for (t, &v) in free.iter().enumerate() {
                assigned[v] = Some(mask >> t & 1 == 1);
            }
            let mut m = BitMatrix::zeros(size).expect("N is bounded by MAX_N");
            for i in 0..size {
                for j in i + 1..size {
                    let bit = match self.var(i, j) {
                        None => true,
                        Some(v) => match assigned[v] {
                            Some(b) => b,
                            None => {
                                let e = self.solution.value(v);
                                e.vars.iter().fold(e.c, |acc, u| {
                                    acc ^ assigned[u].expect("free variables assigned")
                                })
                            }
                        },
                    };
                    m.set_symmetric(i, j, bit);
                }
            }
            if is_meander_matrix(&m)?.holds() {
                let visitation = visitation_of(&m)?;
                out.push(EnumeratedMeander {
                    matrix: m,
                    visitation,
                });
            }
        }
        out.sort_by(|a, b| a.visitation.cmp(&b.visitation));
        out.dedup_by(|a, b| a.matrix == b.matrix);
        Ok(out)
    }
}

impl fmt::Display for PartialMeanderMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = self.n + 1;
        let cells: Vec<Vec<String>> = (0..size)
            .map(|i| (0..size).map(|j| self.cell(i, j).to_string()).collect())
            .collect();
        let label = size.to_string().len();
        let widths: Vec<usize> = (0..size)
            .map(|j| {
                cells
                    .iter()
                    .map(|row| row[j].chars().count())
                    .chain([j.to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        write!(f, "{:>label$}", "")?;
        for (j, w) in widths.iter().enumerate() {
            write!(f, " {j:>w$}")?;
        }
        writeln!(f)?;
        for (i, row) in cells.iter().enumerate() {
            write!(f, "{i:>label$}")?;
            for (c, w) in row.iter().zip(&widths) {
                write!(f, " {c:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn start(prefix: &[usize]) -> PartialMeanderMatrix {
        let mut p = PartialMeanderMatrix::new(8).unwrap();
        for &m in prefix {
            p = p
                .choose(m)
                .unwrap_or_else(|| panic!("{m} rejected after {:?}", p.visitation()));
        }
        p
    }

    fn row(p: &PartialMeanderMatrix, i: usize) -> Vec<String> {
        (0..=p.n()).map(|j| p.cell(i, j).to_string()).collect()
    }

    #[test]
    fn variables_cover_upper_triangle() {
        let p = PartialMeanderMatrix::new(6).unwrap();
        let ids: Vec<usize> = (1..6)
            .flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
            .map(|(i, j)| p.var(i, j).unwrap())
            .collect();
        assert_eq!(ids, (0..15).collect::<Vec<_>>());
        assert_eq!(p.cell_of_var(14), (5, 6));
    }

    #[test]
    fn delta_fill_row_five() {
        let p = PartialMeanderMatrix::new(8).unwrap().delta_fill(5).unwrap();
        assert_eq!(row(&p, 5), ["1", "0", "0", "0", "0", "0", "1", "1", "1"]);
        assert_eq!(row(&p, 0), ["0", "1", "1", "1", "1", "1", "1", "1", "1"]);
    }

    #[test]
    fn delta_fill_errors() {
        let p = PartialMeanderMatrix::new(8).unwrap();
        assert_eq!(
            p.delta_fill(2).unwrap_err(),
            DeltaFillError::ParityViolation {
                index: 2,
                previous: None
            }
        );
        assert_eq!(
            p.delta_fill(9).unwrap_err(),
            DeltaFillError::OutOfRange(9, 8)
        );
        let p = p.delta_fill(5).unwrap();
        assert_eq!(
            p.delta_fill(5).unwrap_err(),
            DeltaFillError::AlreadyChosen(5)
        );
        assert_eq!(
            p.delta_fill(3).unwrap_err(),
            DeltaFillError::ParityViolation {
                index: 3,
                previous: Some(5)
            }
        );
    }

    #[test]
    fn single_unknown_after_five() {
        let p = start(&[5]);
        for (i, j) in [(6, 7), (6, 8), (7, 8), (7, 6)] {
            assert_eq!(p.cell(i, j).to_string(), "a", "cell ({i},{j})");
        }
    }

    #[test]
    fn rejections() {
        let p = start(&[5]);
        assert!(!p.delta_fill(8).unwrap().propagate().is_feasible());
        let p = start(&[5, 2]);
        assert!(!p.delta_fill(7).unwrap().propagate().is_feasible());
    }

    #[test]
    fn invalid_sizes() {
        assert_eq!(
            PartialMeanderMatrix::new(3).unwrap_err(),
            MeanderError::InvalidN(3)
        );
        assert_eq!(
            PartialMeanderMatrix::new(0).unwrap_err(),
            MeanderError::InvalidN(0)
        );
        assert!(matches!(
            PartialMeanderMatrix::new(24),
            Err(MeanderError::Limit(_))
        ));
    }
}
