//! Brute-force planarity test by face counting.
//!
//! The curve is a 4-valent map with one vertex per chord and one edge per
//! step along the word, so `V = n`, `E = 2n`. Edge `e` runs from position
//! `e` to position `e + 1 (mod 2n)`; dart `2e` leaves position `e` and dart
//! `2e + 1` arrives at position `e + 1`. At position `p` the outgoing dart
//! is `2p` and the incoming dart is `2(p - 1) + 1`.
//!
//! A vertex visited at positions `p < q` has two cyclic orders in which the
//! two passages stay transversal: `[in_p, in_q, out_p, out_q]` and its mirror
//! `[in_p, out_q, out_p, in_q]`. Face boundaries follow
//! `next(d) = rot(reverse(d))`.

use serde::{Deserialize, Serialize};

use crate::error::LimitExceeded;
use crate::gauss::{ChordDiagram, GaussCode};
use crate::limits::Limits;
use crate::realize::even::{Method, RealizabilityReport, Verdict};

/// One transversal cyclic order per chord; bit `c` set picks the mirror order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RotationAssignment {
    n: usize,
    mirrored: u64,
}

impl RotationAssignment {
    pub fn new(n: usize, mirrored: u64) -> Self {
        assert!(
            n <= 64 && (n == 64 || mirrored >> n == 0),
            "assignment has bits beyond chord count"
        );
        Self { n, mirrored }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_mirrored(&self, chord: usize) -> bool {
        self.mirrored >> chord & 1 == 1
    }

    /// All `2ⁿ` assignments in binary order.
    pub fn all(n: usize) -> impl Iterator<Item = RotationAssignment> {
        assert!(n < 64);
        (0..1u64 << n).map(move |m| RotationAssignment { n, mirrored: m })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub realizable: bool,
    /// Least genus of an orientable surface carrying the curve.
    pub genus: u32,
    pub max_euler: i64,
}

impl OracleVerdict {
    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.realizable)
    }
}

/// Rotation successor for every dart.
fn rotation(d: &ChordDiagram, a: RotationAssignment) -> Vec<usize> {
    let len = 2 * d.n();
    let out = |p: usize| 2 * p;
    let inc = |p: usize| 2 * ((p + len - 1) % len) + 1;
    let mut succ = vec![0; 2 * len];
    for c in 0..d.n() {
        let (p, q) = d.ends(c);
        let cycle = if a.is_mirrored(c) {
            [inc(p), out(q), out(p), inc(q)]
        } else {
            [inc(p), inc(q), out(p), out(q)]
        };
        for k in 0..4 {
            succ[cycle[k]] = cycle[(k + 1) % 4];
        }
    }
    succ
}

fn faces_of(d: &ChordDiagram, a: RotationAssignment, seen: &mut Vec<bool>) -> usize {
    let succ = rotation(d, a);
    seen.clear();
    seen.resize(succ.len(), false);
    let mut faces = 0;
    for start in 0..succ.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut dart = start;
        while !seen[dart] {
            seen[dart] = true;
            dart = succ[dart ^ 1];
        }
    }
    faces
}

/// Number of faces of the map given by `assignment`.
pub fn count_faces(d: &ChordDiagram, assignment: RotationAssignment) -> usize {
    assert_eq!(
        d.n(),
        assignment.n(),
        "assignment size differs from chord count"
    );
    if d.n() == 0 {
        // a simple closed curve: two faces
        return 2;
    }
    faces_of(d, assignment, &mut Vec::new())
}

/// `χ = V - E + F` for every rotation assignment, in binary order.
pub fn euler_characteristics(d: &ChordDiagram) -> Vec<i64> {
    let n = d.n() as i64;
    if d.n() == 0 {
        return vec![2];
    }
    let mut seen = Vec::new();
    RotationAssignment::all(d.n())
        .map(|a| faces_of(d, a, &mut seen) as i64 - n)
        .collect()
}

pub fn oracle_realizable(code: &GaussCode) -> Result<OracleVerdict, LimitExceeded> {
    oracle_realizable_with(code, Limits::from_env().oracle)
}

/// Tries every rotation assignment, stopping at the first planar one.
pub fn oracle_realizable_with(
    code: &GaussCode,
    max_n: usize,
) -> Result<OracleVerdict, LimitExceeded> {
    let n = code.n();
    if n > max_n {
        return Err(LimitExceeded {
            what: "oracle chord count",
            value: n,
            max: max_n,
        });
    }
    if n == 0 {
        return Ok(OracleVerdict {
            realizable: true,
            genus: 0,
            max_euler: 2,
        });
    }
    let d = ChordDiagram::new(code.clone()).map_err(|_| LimitExceeded {
        what: "oracle chord count",
        value: n,
        max: ChordDiagram::MAX_CHORDS,
    })?;
    let mut seen = Vec::new();
    let mut max_euler = i64::MIN;
    for a in RotationAssignment::all(n) {
        let chi = faces_of(&d, a, &mut seen) as i64 - n as i64;
        max_euler = max_euler.max(chi);
        if chi == 2 {
            break;
        }
    }
    Ok(OracleVerdict {
        realizable: max_euler == 2,
        genus: ((2 - max_euler) / 2) as u32,
        max_euler,
    })
}

pub fn oracle_report(code: &GaussCode) -> Result<RealizabilityReport, LimitExceeded> {
    let v = oracle_realizable(code)?;
    Ok(RealizabilityReport {
        verdict: v.verdict(),
        witness: None,
        method: Method::Oracle,
    })
}
