//! Canonical forms of double-occurrence words and exhaustive enumeration.
//!
//! Two words describe the same diagram when they differ by a cyclic
//! rotation, a reversal, or a renaming of labels. The canonical form is the
//! lexicographically least word over all `2n` rotations of the word and of
//! its reversal, each relabelled by first occurrence (`0, 1, 2, ...`).

use std::collections::HashMap;
use std::fmt;

use crate::error::LimitExceeded;
use crate::gauss::{ChordDiagram, GaussCode};
use crate::limits::Limits;

/// A Gauss code in canonical form, labelled `a`, `b`, ... by first occurrence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalForm(GaussCode);

impl CanonicalForm {
    pub fn code(&self) -> &GaussCode {
        &self.0
    }

    pub fn into_code(self) -> GaussCode {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn canonicalize(code: &GaussCode) -> CanonicalForm {
    let word = canonical_word(code.word());
    CanonicalForm(
        GaussCode::from_indices(&word).expect("canonical word is a double-occurrence word"),
    )
}

/// Least relabelled word over the rotation/reflection orbit of `word`.
/// Labels may be any `usize` values.
pub fn canonical_word(word: &[usize]) -> Vec<usize> {
    let len = word.len();
    if len == 0 {
        return Vec::new();
    }
    if word.iter().any(|&x| x >= len) {
        let mut rename: HashMap<usize, usize> = HashMap::new();
        let compact: Vec<usize> = word
            .iter()
            .map(|x| {
                let next = rename.len();
                *rename.entry(*x).or_insert(next)
            })
            .collect();
        return canonical_word(&compact);
    }
    let reversed: Vec<usize> = word.iter().rev().copied().collect();
    let mut best: Option<Vec<usize>> = None;
    let mut scratch = vec![usize::MAX; len];
    let mut candidate = Vec::with_capacity(len);
    for seq in [word, reversed.as_slice()] {
        for start in 0..len {
            if relabel_if_smaller(seq, start, best.as_deref(), &mut scratch, &mut candidate) {
                best = Some(candidate.clone());
            }
        }
    }
    best.unwrap()
}

/// Writes the relabelled rotation into `out` and returns whether it is
/// strictly smaller than `best`. Stops early once it is known to be larger.
fn relabel_if_smaller(
    seq: &[usize],
    start: usize,
    best: Option<&[usize]>,
    map: &mut [usize],
    out: &mut Vec<usize>,
) -> bool {
    let len = seq.len();
    map.iter_mut().for_each(|m| *m = usize::MAX);
    out.clear();
    let mut next = 0;
    let mut decided_smaller = best.is_none();
    for k in 0..len {
        let x = seq[(start + k) % len];
        if map[x] == usize::MAX {
            map[x] = next;
            next += 1;
        }
        let v = map[x];
        if !decided_smaller {
            let b = best.unwrap()[k];
            if v > b {
                return false;
            }
            if v < b {
                decided_smaller = true;
            }
        }
        out.push(v);
    }
    decided_smaller
}

pub fn is_canonical_word(word: &[usize]) -> bool {
    canonical_word(word) == word
}

/// All canonical double-occurrence words with `n` chords, each exactly once,
/// in lexicographic order. With `require_crossings` set, only words in which
/// every chord crosses at least one other chord are produced.
pub fn enumerate_codes(n: usize, require_crossings: bool) -> Result<CodeEnumerator, LimitExceeded> {
    enumerate_codes_with(n, require_crossings, &Limits::from_env())
}

pub fn enumerate_codes_with(
    n: usize,
    require_crossings: bool,
    limits: &Limits,
) -> Result<CodeEnumerator, LimitExceeded> {
    if n > limits.enumerate_codes {
        return Err(LimitExceeded {
            what: "chord count",
            value: n,
            max: limits.enumerate_codes,
        });
    }
    Ok(CodeEnumerator::new(n, require_crossings))
}

/// Depth-first generator over restricted-growth double-occurrence words
/// (labels introduced in increasing order), filtered to canonical ones.
pub struct CodeEnumerator {
    n: usize,
    require_crossings: bool,
    word: Vec<usize>,
    counts: Vec<u8>,
    introduced: usize,
    // next label to try at each depth
    choice: Vec<usize>,
    done: bool,
}

impl CodeEnumerator {
    fn new(n: usize, require_crossings: bool) -> Self {
        Self {
            n,
            require_crossings,
            word: Vec::with_capacity(2 * n),
            counts: vec![0; n],
            introduced: 0,
            choice: vec![0; 2 * n + 1],
            done: false,
        }
    }

    /// Advances to the next complete restricted-growth word.
    fn advance(&mut self) -> bool {
        let len = 2 * self.n;
        if len == 0 {
            if self.done {
                return false;
            }
            self.done = true;
            return true;
        }
        loop {
            let depth = self.word.len();
            if depth == len {
                self.pop();
                continue;
            }
            let mut placed = false;
            while self.choice[depth] <= self.introduced.min(self.n - 1) {
                let x = self.choice[depth];
                self.choice[depth] += 1;
                let open = x < self.introduced && self.counts[x] == 1;
                let fresh = x == self.introduced;
                if !(open || fresh) {
                    continue;
                }
                self.word.push(x);
                self.counts[x] += 1;
                if fresh {
                    self.introduced += 1;
                }
                self.choice[depth + 1] = 0;
                placed = true;
                break;
            }
            if placed {
                if self.word.len() == len {
                    return true;
                }
            } else {
                if depth == 0 {
                    self.done = true;
                    return false;
                }
                self.pop();
            }
        }
    }

    fn pop(&mut self) {
        let x = self.word.pop().expect("pop on non-empty word");
        self.counts[x] -= 1;
        if self.counts[x] == 0 {
            self.introduced -= 1;
        }
    }
}

impl Iterator for CodeEnumerator {
    type Item = CanonicalForm;

    fn next(&mut self) -> Option<CanonicalForm> {
        if self.done && self.n > 0 {
            return None;
        }
        while self.advance() {
            if !is_canonical_word(&self.word) {
                continue;
            }
            let code =
                GaussCode::from_indices(&self.word).expect("generated words are double-occurrence");
            if self.require_crossings && !every_chord_crosses(&code) {
                continue;
            }
            return Some(CanonicalForm(code));
        }
        None
    }
}

fn every_chord_crosses(code: &GaussCode) -> bool {
    ChordDiagram::new(code.clone())
        .map(|d| d.isolated_chords().is_empty())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(s: &str) -> String {
        canonicalize(&GaussCode::parse(s).unwrap()).to_string()
    }

    fn all(n: usize, flag: bool) -> Vec<String> {
        enumerate_codes_with(n, flag, &Limits::default())
            .unwrap()
            .map(|c| c.to_string())
            .collect()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canon("bcabca"), "abcabc");
        assert_eq!(canon("baba"), "abab");
        assert_eq!(canon("abba"), "aabb");
        assert_eq!(canon(""), "");
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(all(0, false), [""]);
        assert_eq!(all(1, false), ["aa"]);
        assert!(all(1, true).is_empty());
        assert_eq!(all(2, false), ["aabb", "abab"]);
        assert_eq!(all(2, true), ["abab"]);
    }

    #[test]
    fn limit_is_enforced() {
        let limits = Limits {
            enumerate_codes: 3,
            ..Limits::default()
        };
        assert!(enumerate_codes_with(4, false, &limits).is_err());
        assert!(enumerate_codes_with(3, false, &limits).is_ok());
    }
}
