//! Gauss codes, chord diagrams, interlacement and Conway smoothing.

mod canonical;
mod code;
mod diagram;

pub use canonical::{
    canonical_word, canonicalize, enumerate_codes, enumerate_codes_with, is_canonical_word,
    CanonicalForm, CodeEnumerator,
};
pub use code::{letter_label, CodeRecord, GaussCode};
pub(crate) use diagram::bits;
pub use diagram::ChordDiagram;
