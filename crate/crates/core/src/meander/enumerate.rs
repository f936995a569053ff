//! Backtracking construction of every meander matrix of a given size.

use rayon::prelude::*;

use crate::error::MeanderError;
use crate::meander::predicate::is_meander_matrix;
use crate::meander::symmetry::is_canonical_visitation;
use crate::meander::tableau::{PartialMeanderMatrix, Propagation};
use crate::meander::EnumeratedMeander;

/// Depth-first search over visitation orders. Candidates are tried in
/// ascending order, so results arrive in lexicographic visitation order.
/// A candidate survives when its row can be Δ-filled and propagation stays
/// feasible; a complete grid is emitted when it is a meander matrix.
pub struct MeanderEnumerator {
    stack: Vec<Frame>,
    canonical: bool,
}

struct Frame {
    state: PartialMeanderMatrix,
    candidates: Vec<usize>,
    next: usize,
}

impl Frame {
    fn new(state: PartialMeanderMatrix) -> Self {
        let candidates = state.candidates();
        Self {
            state,
            candidates,
            next: 0,
        }
    }
}

/// Tableau after Δ-filling and propagating each prefix entry in turn, or
/// `None` when propagation rules the prefix out.
pub fn apply_prefix(
    n: usize,
    prefix: &[usize],
) -> Result<Option<PartialMeanderMatrix>, MeanderError> {
    let mut state = PartialMeanderMatrix::new(n)?;
    for &m in prefix {
        match state.delta_fill(m)?.propagate() {
            Propagation::Feasible(next) => state = next,
            Propagation::Infeasible => return Ok(None),
        }
    }
    Ok(Some(state))
}

/// Meander matrices of size `N + 1` whose visitation starts with `forced_prefix`.
pub fn enumerate_meander_matrices(
    n: usize,
    forced_prefix: &[usize],
) -> Result<MeanderEnumerator, MeanderError> {
    let stack = apply_prefix(n, forced_prefix)?
        .map(Frame::new)
        .into_iter()
        .collect();
    Ok(MeanderEnumerator {
        stack,
        canonical: false,
    })
}

impl MeanderEnumerator {
    /// Keep only visitations that are least in their symmetry orbit.
    pub fn canonical(mut self, on: bool) -> Self {
        self.canonical = on;
        self
    }

    fn from_state(state: PartialMeanderMatrix, canonical: bool) -> Self {
        Self {
            stack: vec![Frame::new(state)],
            canonical,
        }
    }

    fn leaf(&self, state: &PartialMeanderMatrix) -> Option<EnumeratedMeander> {
        let matrix = state.to_matrix().expect("a complete tableau is constant");
        let visitation = state.visitation().to_vec();
        if self.canonical && !is_canonical_visitation(&visitation) {
            return None;
        }
        is_meander_matrix(&matrix)
            .expect("tableau grids are symmetric")
            .holds()
            .then_some(EnumeratedMeander { matrix, visitation })
    }
}

impl Iterator for MeanderEnumerator {
    type Item = EnumeratedMeander;

    fn next(&mut self) -> Option<EnumeratedMeander> {
        loop {
            let top = self.stack.last_mut()?;
            if top.state.is_complete() {
                let frame = self.stack.pop().expect("stack is non-empty");
                match self.leaf(&frame.state) {
                    Some(found) => return Some(found),
                    None => continue,
                }
            }
            if top.next == top.candidates.len() {
                self.stack.pop();
                continue;
            }
            let m = top.candidates[top.next];
            top.next += 1;
            if let Some(child) = top.state.choose(m) {
                self.stack.push(Frame::new(child));
            }
        }
    }
}

/// Same output as [`enumerate_meander_matrices`], with the branches below
/// the prefix explored in parallel and concatenated in order.
pub fn collect_meander_matrices(
    n: usize,
    forced_prefix: &[usize],
    canonical: bool,
) -> Result<Vec<EnumeratedMeander>, MeanderError> {
    let Some(root) = apply_prefix(n, forced_prefix)? else {
        return Ok(Vec::new());
    };
    if root.is_complete() {
        return Ok(MeanderEnumerator::from_state(root, canonical).collect());
    }
    let branches: Vec<Vec<EnumeratedMeander>> = root
        .candidates()
        .par_iter()
        .map(|&m| match root.choose(m) {
            Some(child) => MeanderEnumerator::from_state(child, canonical).collect(),
            None => Vec::new(),
        })
        .collect();
    Ok(branches.into_iter().flatten().collect())
}
