//! Meander matrices: recognition, step-by-step construction with GF(2)
//! propagation, reconstruction of the meander, and a direct search.

mod enumerate;
mod gf2;
mod oracle;
mod predicate;
mod reconstruct;
mod symmetry;
mod tableau;

use serde::{Deserialize, Serialize};

use crate::bitmatrix::BitMatrix;

pub use enumerate::{
    apply_prefix, collect_meander_matrices, enumerate_meander_matrices, MeanderEnumerator,
};
pub use oracle::{oracle_enumerate_meanders, oracle_enumerate_meanders_with};
pub use predicate::{is_meander_matrix, MeanderCheck, MeanderViolation};
pub use reconstruct::{
    encode_meander, reconstruct_meander, visitation_of, MeanderReconstruction, MeanderRecord,
};
pub use symmetry::{canonical_visitation, is_canonical_visitation, visitation_orbit};
pub use tableau::{Cell, PartialMeanderMatrix, Propagation, MAX_RESIDUAL_UNKNOWNS};

/// A meander matrix together with the visitation order that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumeratedMeander {
    #[serde(with = "matrix_rows")]
    pub matrix: BitMatrix,
    pub visitation: Vec<usize>,
}

mod matrix_rows {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::bitmatrix::BitMatrix;

    pub fn serialize<S: Serializer>(m: &BitMatrix, s: S) -> Result<S::Ok, S::Error> {
        m.to_rows().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BitMatrix, D::Error> {
        let rows: Vec<Vec<i64>> = Vec::deserialize(d)?;
        BitMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}
