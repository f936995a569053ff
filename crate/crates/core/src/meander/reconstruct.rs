//! From a meander matrix to the meander it describes, and back.
//!
//! With the full row `r` removed and the other indices read as crossing
//! points `1..N` along the line, `m_ij = 1` (`i < j`) exactly when the curve
//! reaches `i` before `j`. The pairs with `m_ij = 0` are therefore the
//! inversion set of the position function `π(i) = position of i`, and the
//! visitation order is `π⁻¹`.

use serde::{Deserialize, Serialize};

use crate::bitmatrix::BitMatrix;
use crate::braid::{permutation_from_inversions, InversionSet};
use crate::error::{MatrixError, MeanderError};
use crate::gauss::{ChordDiagram, GaussCode};
use crate::limits::Limits;
use crate::meander::predicate::is_meander_matrix;
use crate::realize::oracle_realizable_with;

/// A closed meander with `N` crossings, given by the order in which the
/// curve meets the points `1..N` of the line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeanderReconstruction {
    visitation: Vec<usize>,
}

impl MeanderReconstruction {
    /// Wraps a visitation order without checking it; see [`Self::verify`].
    pub fn from_visitation(visitation: Vec<usize>) -> Self {
        Self { visitation }
    }

    pub fn n(&self) -> usize {
        self.visitation.len()
    }

    pub fn visitation(&self) -> &[usize] {
        &self.visitation
    }

    /// `r 1 2 ... N r w₁ ... w_N`, with `r` written as `0`.
    pub fn gauss_code(&self) -> GaussCode {
        let n = self.n();
        let tokens: Vec<String> = std::iter::once(0)
            .chain(1..=n)
            .chain(std::iter::once(0))
            .chain(self.visitation.iter().copied())
            .map(|x| x.to_string())
            .collect();
        GaussCode::from_labels(tokens).expect("visitation is a permutation")
    }

    /// Arcs `(w₁,w₂), (w₃,w₄), ...` on one side of the line.
    pub fn upper(&self) -> Vec<(usize, usize)> {
        self.visitation.chunks(2).map(|p| (p[0], p[1])).collect()
    }

    /// Arcs `(w₂,w₃), ..., (w_N,w₁)` on the other side. The last one passes
    /// through `r`, which sits on the line to the left of point 1.
    pub fn lower(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n / 2)
            .map(|k| (self.visitation[2 * k + 1], self.visitation[(2 * k + 2) % n]))
            .collect()
    }

    /// Checks every structural invariant. The genus of the Gauss code is
    /// checked by the face-counting oracle when `N + 1 ≤ oracle_max`.
    pub fn verify(&self, oracle_max: usize) -> Result<(), String> {
        let n = self.n();
        let w = &self.visitation;
        if n < 2 || n % 2 == 1 {
            return Err(format!("N = {n} is not a positive even number"));
        }
        let mut seen = vec![false; n + 1];
        for &x in w {
            if x == 0 || x > n || seen[x] {
                return Err(format!("visitation {w:?} is not a permutation of 1..{n}"));
            }
            seen[x] = true;
        }
        if w[0].is_multiple_of(2) {
            return Err(format!("visitation {w:?} starts at an even point"));
        }
        if w.windows(2).any(|p| p[0] % 2 == p[1] % 2) {
            return Err(format!("visitation {w:?} does not alternate parity"));
        }
        // split (w_N, w₁) at r, written as point 0
        let mut lower = self.lower();
        let (last, first) = lower.pop().expect("N ≥ 2");
        lower.extend([(0, first), (last, 0)]);
        for (side, arcs) in [("upper", self.upper()), ("lower", lower)] {
            if let Some((a, b)) = crossing_arcs(&arcs) {
                return Err(format!("{side} arcs {a:?} and {b:?} cross"));
            }
        }
        if !single_cycle(n, &self.upper(), &self.lower()) {
            return Err("the arcs do not close into one curve".to_string());
        }
        if n < oracle_max {
            let verdict = oracle_realizable_with(&self.gauss_code(), oracle_max)
                .map_err(|e| e.to_string())?;
            if !verdict.realizable {
                return Err(format!("Gauss code has genus {}", verdict.genus));
            }
        }
        Ok(())
    }
}

/// Two arcs cross when exactly one endpoint of one lies strictly inside the other.
fn crossing_arcs(arcs: &[(usize, usize)]) -> Option<((usize, usize), (usize, usize))> {
    for (k, &(a, b)) in arcs.iter().enumerate() {
        let (lo, hi) = (a.min(b), a.max(b));
        for &(c, d) in &arcs[k + 1..] {
            if (lo < c && c < hi) != (lo < d && d < hi) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

fn single_cycle(n: usize, upper: &[(usize, usize)], lower: &[(usize, usize)]) -> bool {
    let mut partner = [vec![0; n + 1], vec![0; n + 1]];
    for (side, arcs) in [upper, lower].into_iter().enumerate() {
        for &(a, b) in arcs {
            partner[side][a] = b;
            partner[side][b] = a;
        }
    }
    let mut x = 1;
    let mut side = 0;
    let mut steps = 0;
    loop {
        x = partner[side][x];
        side ^= 1;
        steps += 1;
        if x == 1 && side == 0 {
            break;
        }
        if steps > n {
            return false;
        }
    }
    steps == n
}

/// Visitation order encoded by a meander matrix.
pub fn visitation_of(m: &BitMatrix) -> Result<Vec<usize>, MeanderError> {
    let r = m
        .full_rows()
        .next()
        .ok_or_else(|| MeanderError::NotMeanderMatrix("no full row".to_string()))?;
    let line: Vec<usize> = (0..m.size()).filter(|&x| x != r).collect();
    let n = line.len();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !m.get(line[a], line[b]) {
                pairs.push((a + 1, b + 1));
            }
        }
    }
    let inversions = InversionSet::new(n, pairs).expect("pairs are ordered and in range");
    let pi = permutation_from_inversions(&inversions).map_err(|_| {
        MeanderError::ReconstructionInconsistent(
            "the zero pattern is not the inversion set of any order".to_string(),
        )
    })?;
    Ok(pi.inverse().images().to_vec())
}

/// Recovers the meander from its matrix and checks the result.
pub fn reconstruct_meander(m: &BitMatrix) -> Result<MeanderReconstruction, MeanderError> {
    let check = is_meander_matrix(m)?;
    if !check.holds() {
        let reasons: Vec<String> = check.definition.iter().map(|v| v.to_string()).collect();
        return Err(MeanderError::NotMeanderMatrix(reasons.join("; ")));
    }
    if m.size() < 3 {
        return Err(MeanderError::InvalidN(m.size().saturating_sub(1)));
    }
    let rec = MeanderReconstruction::from_visitation(visitation_of(m)?);
    rec.verify(Limits::from_env().meander_oracle + 1)
        .map_err(MeanderError::ReconstructionInconsistent)?;
    Ok(rec)
}

/// Interlacement matrix of `r 1 ... N r w₁ ... w_N` with `r` as row 0.
pub fn encode_meander(rec: &MeanderReconstruction) -> BitMatrix {
    let d = ChordDiagram::new(rec.gauss_code()).expect("at most 64 chords");
    let labels: Vec<String> = (0..=rec.n()).map(|x| x.to_string()).collect();
    d.interlacement_for_labels(&labels)
        .expect("labels 0..N are the chords")
}

/// JSON form `{"matrix": [[..]], "visitation": [..], "upper": [[i,j],..], "lower": [[i,j],..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeanderRecord {
    pub matrix: Vec<Vec<u8>>,
    pub visitation: Vec<usize>,
    pub upper: Vec<(usize, usize)>,
    pub lower: Vec<(usize, usize)>,
}

impl MeanderRecord {
    pub fn new(matrix: &BitMatrix, rec: &MeanderReconstruction) -> Self {
        Self {
            matrix: matrix.to_rows(),
            visitation: rec.visitation.clone(),
            upper: rec.upper(),
            lower: rec.lower(),
        }
    }

    pub fn matrix(&self) -> Result<BitMatrix, MatrixError> {
        let rows: Vec<Vec<i64>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&x| i64::from(x)).collect())
            .collect();
        BitMatrix::from_rows(&rows)
    }
}
