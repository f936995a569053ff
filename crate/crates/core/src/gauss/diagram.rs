use crate::bitmatrix::BitMatrix;
use crate::error::GaussError;
use crate::gauss::GaussCode;

/// Chords of a Gauss diagram as endpoint positions on a cycle of `2n` points.
///
/// Interlacement is precomputed as one bitset per chord: bit `b` of
/// `crossing[a]` is set iff chords `a` and `b` interlace. A chord never
/// crosses itself, so `c ∉ c_×` and `c ∈ c_∥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    code: GaussCode,
    ends: Vec<(usize, usize)>,
    crossing: Vec<u64>,
}

impl ChordDiagram {
    pub const MAX_CHORDS: usize = 64;

    pub fn new(code: GaussCode) -> Result<Self, GaussError> {
        let n = code.n();
        if n > Self::MAX_CHORDS {
            return Err(GaussError::TooManyChords {
                n,
                max: Self::MAX_CHORDS,
            });
        }
        let mut ends = vec![(usize::MAX, usize::MAX); n];
        for (pos, &c) in code.word().iter().enumerate() {
            if ends[c].0 == usize::MAX {
                ends[c].0 = pos;
            } else {
                ends[c].1 = pos;
            }
        }
        let mut crossing = vec![0u64; n];
        for a in 0..n {
            let (a0, a1) = ends[a];
            for b in a + 1..n {
                let (b0, b1) = ends[b];
                let inside0 = a0 < b0 && b0 < a1;
                let inside1 = a0 < b1 && b1 < a1;
                if inside0 != inside1 {
                    crossing[a] |= 1 << b;
                    crossing[b] |= 1 << a;
                }
            }
        }
        Ok(Self {
            code,
            ends,
            crossing,
        })
    }

    pub fn parse(text: &str) -> Result<Self, Box<dyn std::error::Error>> {
        Ok(Self::new(GaussCode::parse(text)?)?)
    }

    pub fn code(&self) -> &GaussCode {
        &self.code
    }

    pub fn n(&self) -> usize {
        self.ends.len()
    }

    /// Positions of the two endpoints of `chord`, first one smaller.
    pub fn ends(&self, chord: usize) -> (usize, usize) {
        self.ends[chord]
    }

    pub fn chord(&self, label: &str) -> Result<usize, GaussError> {
        self.code
            .chord_of(label)
            .ok_or_else(|| GaussError::UnknownChord(label.to_string()))
    }

    pub fn label(&self, chord: usize) -> &str {
        self.code.label(chord)
    }

    pub fn crosses(&self, a: usize, b: usize) -> bool {
        self.crossing[a] >> b & 1 == 1
    }

    /// `c_×` as a bitset over chord indices.
    pub fn crossing_mask(&self, c: usize) -> u64 {
        self.crossing[c]
    }

    /// `c_×` as chord indices in ascending order.
    pub fn crossing_set(&self, c: usize) -> Vec<usize> {
        bits(self.crossing[c]).collect()
    }

    /// `c_∥`: chords not crossing `c`, including `c` itself.
    pub fn parallel_set(&self, c: usize) -> Vec<usize> {
        (0..self.n()).filter(|&b| !self.crosses(c, b)).collect()
    }

    pub fn crossing_count(&self, c: usize) -> u32 {
        self.crossing[c].count_ones()
    }

    /// `|a_× ∩ b_×|`.
    pub fn common_crossings(&self, a: usize, b: usize) -> u32 {
        (self.crossing[a] & self.crossing[b]).count_ones()
    }

    pub fn isolated_chords(&self) -> Vec<usize> {
        (0..self.n()).filter(|&c| self.crossing[c] == 0).collect()
    }

    /// `M(𝔊)`: `m_ij = 1` iff chords `i` and `j` interlace, rows in chord order.
    pub fn interlacement_matrix(&self) -> BitMatrix {
        BitMatrix::from_fn(self.n(), |i, j| self.crosses(i, j))
            .expect("chord count is bounded by MAX_CHORDS")
    }

    /// The interlacement matrix with rows ordered by the given labels, or
    /// `None` if the label sets differ.
    pub fn interlacement_for_labels<S: AsRef<str>>(&self, labels: &[S]) -> Option<BitMatrix> {
        if labels.len() != self.n() {
            return None;
        }
        let order: Option<Vec<usize>> = labels
            .iter()
            .map(|l| self.code.chord_of(l.as_ref()))
            .collect();
        Some(self.interlacement_matrix().select(&order?))
    }

    /// Conway smoothing of the chord with the given label; see [`Self::smooth_index`].
    pub fn smooth_chord(&self, label: &str) -> Result<ChordDiagram, GaussError> {
        self.smooth_index(self.chord(label)?)
    }

    /// Conway smoothing as a word rewrite: `W₁ c W₂ c W₃ ↦ W₁ W₂ᴿ W₃`.
    pub fn smooth_index(&self, c: usize) -> Result<ChordDiagram, GaussError> {
        if c >= self.n() {
            return Err(GaussError::ChordOutOfRange {
                index: c,
                n: self.n(),
            });
        }
        let (p, q) = self.ends[c];
        let word = self.code.word();
        let tokens: Vec<&str> = word[..p]
            .iter()
            .chain(word[p + 1..q].iter().rev())
            .chain(word[q + 1..].iter())
            .map(|&x| self.code.label(x))
            .collect();
        ChordDiagram::new(GaussCode::from_labels(tokens)?)
    }

    /// Interlacement after smoothing `c`, computed from adjacency alone:
    /// `c` is deleted and interlacement is toggled for every pair of chords in
    /// `c_×`. Rows keep the original chord order with `c` removed.
    pub fn smoothed_interlacement(&self, c: usize) -> Result<BitMatrix, GaussError> {
        if c >= self.n() {
            return Err(GaussError::ChordOutOfRange {
                index: c,
                n: self.n(),
            });
        }
        let cross = self.crossing[c];
        let mut m = self.interlacement_matrix();
        for a in bits(cross) {
            // toggle row a on c_×, excluding the diagonal
            let flip = cross & !(1u64 << a);
            for b in bits(flip) {
                let v = m.get(a, b);
                m.set(a, b, !v);
            }
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&x| x != c).collect();
        Ok(m.select(&keep))
    }

    /// Labels of all chords except `c`, in chord order.
    pub fn labels_without(&self, c: usize) -> Vec<&str> {
        (0..self.n())
            .filter(|&x| x != c)
            .map(|x| self.label(x))
            .collect()
    }
}

/// Iterates the set bit positions of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
