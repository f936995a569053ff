//! Permutations, their inversion sets, and positive braid words in which
//! every pair of strands crosses at most once. Everything here is 1-based.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;

/// A bijection on `{1..n}` stored as its images `π(1), ..., π(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(BraidError::NotPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// Parses `4,2,6,1,5,3` (commas and/or whitespace, optionally in parentheses).
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let text = text.trim();
        let text = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text);
        let images: Result<Vec<usize>, _> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect();
        images
            .map_err(|_| BraidError::NotPermutation(Vec::new()))
            .and_then(Self::new)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self(inv)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = BraidError;

    fn try_from(v: Vec<usize>) -> Result<Self, BraidError> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A set of pairs `(i, j)` with `1 ≤ i < j ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct InversionSet {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn new(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, BraidError> {
        let mut set = BTreeSet::new();
        for (i, j) in pairs {
            if i == 0 || i >= j || j > n {
                return Err(BraidError::MalformedPair(i, j));
            }
            set.insert((i, j));
        }
        Ok(Self { n, pairs: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }
}

impl fmt::Display for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `R_π = {(i, j) : i < j, π(i) > π(j)}`.
pub fn inversion_set(pi: &Permutation) -> InversionSet {
    let n = pi.n();
    let pairs = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| pi.apply(i) > pi.apply(j));
    InversionSet {
        n,
        pairs: pairs.collect(),
    }
}

/// Transitive, and every `(i, k) ∈ R` has `(i, j) ∈ R` or `(j, k) ∈ R` for
/// each `i < j < k`.
pub fn is_valid_inversion_set(r: &InversionSet) -> bool {
    let n = r.n;
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let ij = r.contains(i, j);
                let jk = r.contains(j, k);
                let ik = r.contains(i, k);
                if ij && jk && !ik {
                    return false;
                }
                if ik && !ij && !jk {
                    return false;
                }
            }
        }
    }
    true
}

/// The unique `π` with `R_π = r`. Position `i` receives the rank
/// `1 + #{j < i : (j, i) ∉ R} + #{j > i : (i, j) ∈ R}`.
pub fn permutation_from_inversions(r: &InversionSet) -> Result<Permutation, BraidError> {
    let n = r.n;
    let images: Vec<usize> = (1..=n)
        .map(|i| {
            let below = (1..i).filter(|&j| !r.contains(j, i)).count();
            let above = (i + 1..=n).filter(|&j| r.contains(i, j)).count();
            1 + below + above
        })
        .collect();
    let pi = Permutation::new(images).map_err(|_| BraidError::InvalidInversionSet)?;
    if inversion_set(&pi) != *r {
        return Err(BraidError::InvalidInversionSet);
    }
    Ok(pi)
}

/// Positive braid word `σ_{i₁} σ_{i₂} ...`, generators stored as `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord(pub Vec<usize>);

impl BraidWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generators(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Insertion sort of `π(1), ..., π(n)`: each adjacent swap of positions
/// `p, p + 1` emits `σ_p`. Every emitted swap removes one inversion, so the
/// word has length `|R_π|`.
pub fn nonrepeating_braid_word(pi: &Permutation) -> BraidWord {
    let mut t = pi.images().to_vec();
    let mut word = Vec::new();
    for k in 1..t.len() {
        let mut p = k;
        while p > 0 && t[p - 1] > t[p] {
            t.swap(p - 1, p);
            word.push(p);
            p -= 1;
        }
    }
    BraidWord(word)
}

/// Strand order after reading `word`, and how often each strand pair
/// `(a, b)`, `a < b`, crossed. Strands are named by starting position.
pub fn simulate_braid(n: usize, word: &BraidWord) -> (Vec<usize>, BTreeMap<(usize, usize), usize>) {
    let mut order: Vec<usize> = (1..=n).collect();
    let mut counts = BTreeMap::new();
    for &g in word.generators() {
        let (a, b) = (order[g - 1], order[g]);
        *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        order.swap(g - 1, g);
    }
    (order, counts)
}

/// `{"pi": [...], "inversions": [[i,j],...], "word": [i,...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidRecord {
    pub pi: Permutation,
    pub inversions: Vec<(usize, usize)>,
    pub word: BraidWord,
}

impl BraidRecord {
    pub fn new(pi: &Permutation) -> Self {
        Self {
            pi: pi.clone(),
            inversions: inversion_set(pi).pairs().collect(),
            word: nonrepeating_braid_word(pi),
        }
    }
}
