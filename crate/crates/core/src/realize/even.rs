use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GaussError;
use crate::gauss::ChordDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Realizable,
    NotRealizable,
}

impl Verdict {
    pub fn from_bool(realizable: bool) -> Self {
        if realizable {
            Verdict::Realizable
        } else {
            Verdict::NotRealizable
        }
    }

    pub fn is_realizable(self) -> bool {
        self == Verdict::Realizable
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Realizable => "realizable",
            Verdict::NotRealizable => "not-realizable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    EvenCondition,
    Theorem34,
    Oracle,
}

/// Why a diagram was rejected. Chords are named by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `|c_×|` is odd.
    OddChord { chord: String, count: u32 },
    /// `a` and `b` do not cross and `|a_× ∩ b_×|` is odd.
    OddPair { a: String, b: String, count: u32 },
    /// Smoothing `chord` yields a diagram that fails the even condition.
    Smoothed { chord: String, inner: Box<Witness> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::OddChord { chord, count } => write!(f, "|{chord}_×| = {count} is odd"),
            Witness::OddPair { a, b, count } => {
                write!(
                    f,
                    "|{a}_× ∩ {b}_×| = {count} is odd for non-crossing {a}, {b}"
                )
            }
            Witness::Smoothed { chord, inner } => write!(f, "after smoothing {chord}: {inner}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl RealizabilityReport {
    pub fn is_realizable(&self) -> bool {
        self.verdict.is_realizable()
    }
}

impl fmt::Display for RealizabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => write!(f, "{} (witness: {w})", self.verdict),
            None => write!(f, "{}", self.verdict),
        }
    }
}

/// What [`theorem34_realizable_with`] does with chords that cross nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IsolatedChords {
    /// Delete them (repeatedly) before testing.
    #[default]
    Delete,
    /// Refuse the input.
    Reject,
}

/// First violation of the even condition, chords before pairs, in index order.
pub fn even_condition_witness(d: &ChordDiagram) -> Option<Witness> {
    let n = d.n();
    for c in 0..n {
        let count = d.crossing_count(c);
        if count % 2 == 1 {
            return Some(Witness::OddChord {
                chord: d.label(c).to_string(),
                count,
            });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if d.crosses(a, b) {
                continue;
            }
            let count = d.common_crossings(a, b);
            if count % 2 == 1 {
                return Some(Witness::OddPair {
                    a: d.label(a).to_string(),
                    b: d.label(b).to_string(),
                    count,
                });
            }
        }
    }
    None
}

/// Every chord crosses an even number of chords, and every pair of
/// non-crossing chords has an even number of common crossing chords.
pub fn even_condition(d: &ChordDiagram) -> RealizabilityReport {
    let witness = even_condition_witness(d);
    RealizabilityReport {
        verdict: Verdict::from_bool(witness.is_none()),
        witness,
        method: Method::EvenCondition,
    }
}

/// Realizable iff the even condition holds for the diagram and for its
/// Conway smoothing at every chord. Isolated chords are deleted first.
pub fn theorem34_realizable(d: &ChordDiagram) -> RealizabilityReport {
    theorem34_realizable_with(d, IsolatedChords::Delete)
        .expect("deleting isolated chords never fails")
}

pub fn theorem34_realizable_with(
    d: &ChordDiagram,
    isolated: IsolatedChords,
) -> Result<RealizabilityReport, GaussError> {
    let reduced = match isolated {
        IsolatedChords::Reject => {
            if let Some(&c) = d.isolated_chords().first() {
                return Err(GaussError::IsolatedChord(d.label(c).to_string()));
            }
            d.clone()
        }
        IsolatedChords::Delete => delete_isolated(d),
    };
    let witness = even_condition_witness(&reduced).or_else(|| {
        (0..reduced.n()).find_map(|c| {
            let smoothed = reduced.smooth_index(c).expect("chord index in range");
            even_condition_witness(&smoothed).map(|inner| Witness::Smoothed {
                chord: reduced.label(c).to_string(),
                inner: Box::new(inner),
            })
        })
    });
    Ok(RealizabilityReport {
        verdict: Verdict::from_bool(witness.is_none()),
        witness,
        method: Method::Theorem34,
    })
}

/// Removes chords with empty `c_×` until none remain.
pub fn delete_isolated(d: &ChordDiagram) -> ChordDiagram {
    let mut current = d.clone();
    loop {
        let isolated = current.isolated_chords();
        if isolated.is_empty() {
            return current;
        }
        let code = current.code().without_chords(&isolated);
        current = ChordDiagram::new(code).expect("fewer chords than before");
    }
}
