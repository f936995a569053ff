use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GaussError;

/// A double-occurrence word: the crossing labels met along a closed curve.
///
/// Labels are opaque, case-sensitive tokens. Internally every label is given
/// a chord index in order of first occurrence, and the word is stored as a
/// sequence of those indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussCode {
    labels: Vec<String>,
    word: Vec<usize>,
}

/// Label used for generated words: `a`..`z`, then `c26`, `c27`, ...
pub fn letter_label(index: usize) -> String {
    if index < 26 {
        ((b'a' + index as u8) as char).to_string()
    } else {
        format!("c{index}")
    }
}

impl GaussCode {
    /// The empty word (no crossings).
    pub fn empty() -> Self {
        Self {
            labels: Vec::new(),
            word: Vec::new(),
        }
    }

    /// Parses either a compact string of single-character labels (`abcabc`)
    /// or a list of tokens separated by whitespace and/or commas (`1, 2, 1, 2`).
    pub fn parse(text: &str) -> Result<Self, GaussError> {
        let text = text.trim();
        if text.chars().any(|c| c.is_whitespace() || c == ',') {
            Self::from_labels(
                text.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty()),
            )
        } else {
            Self::from_labels(text.chars().map(|c| c.to_string()))
        }
    }

    pub fn from_labels<I, S>(tokens: I) -> Result<Self, GaussError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut counts = Vec::new();
        let mut word = Vec::new();
        for token in tokens {
            let token = token.as_ref();
            let id = match index.get(token) {
                Some(&id) => id,
                None => {
                    let id = labels.len();
                    index.insert(token.to_string(), id);
                    labels.push(token.to_string());
                    counts.push(0usize);
                    id
                }
            };
            counts[id] += 1;
            word.push(id);
        }
        if let Some((id, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 2) {
            return Err(GaussError::NotDoubleOccurrence {
                label: labels[id].clone(),
                count,
            });
        }
        Ok(Self { labels, word })
    }

    /// Builds a code from chord indices, labelling chords `a`, `b`, ... in
    /// order of first occurrence.
    pub fn from_indices(word: &[usize]) -> Result<Self, GaussError> {
        let mut rename: HashMap<usize, usize> = HashMap::new();
        let relabelled: Vec<usize> = word
            .iter()
            .map(|x| {
                let next = rename.len();
                *rename.entry(*x).or_insert(next)
            })
            .collect();
        Self::from_labels(relabelled.into_iter().map(letter_label))
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The word as chord indices (assigned by first occurrence).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Chord labels, indexed by chord.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, chord: usize) -> &str {
        &self.labels[chord]
    }

    pub fn chord_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The word as label tokens.
    pub fn tokens(&self) -> impl Iterator<Item = &str> + '_ {
        self.word.iter().map(|&c| self.labels[c].as_str())
    }

    /// Labels separated by single spaces, whatever their length.
    pub fn spaced(&self) -> String {
        self.tokens().collect::<Vec<_>>().join(" ")
    }

    /// Removes every occurrence of the given chords, keeping the rest of the word in order.
    pub fn without_chords(&self, removed: &[usize]) -> Self {
        let tokens: Vec<&str> = self
            .word
            .iter()
            .filter(|c| !removed.contains(c))
            .map(|&c| self.labels[c].as_str())
            .collect();
        Self::from_labels(tokens)
            .expect("removing whole chords keeps the double-occurrence property")
    }

    pub fn to_record(&self) -> CodeRecord {
        CodeRecord {
            n: self.n(),
            word: self.tokens().map(str::to_string).collect(),
        }
    }

    pub fn from_record(record: &CodeRecord) -> Result<Self, GaussError> {
        let code = Self::from_labels(&record.word)?;
        if code.n() != record.n {
            return Err(GaussError::CountMismatch {
                declared: record.n,
                actual: code.n(),
            });
        }
        Ok(code)
    }
}

impl fmt::Display for GaussCode {
    /// Compact form when every label is a single character, space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.labels.iter().all(|l| l.chars().count() == 1);
        let tokens: Vec<&str> = self.tokens().collect();
        if compact {
            write!(f, "{}", tokens.concat())
        } else {
            write!(f, "{}", tokens.join(" "))
        }
    }
}

impl fmt::Debug for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussCode({self})")
    }
}

/// JSON rendering `{"n": k, "word": ["a", "b", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub n: usize,
    pub word: Vec<String>,
}
