//! Relabellings of a visitation order that describe the same picture:
//! reversing the direction of travel and reflecting the line
//! (`i ↦ N + 1 - i`). The curve passes `r` between `w_N` and `w₁`, so the
//! starting point is fixed. Only images that start at an odd point are kept,
//! matching the enumerator's normalisation.

/// Every odd-start image of `w` under the symmetries, with repeats.
pub fn visitation_orbit(w: &[usize]) -> Vec<Vec<usize>> {
    let n = w.len();
    let mut out = Vec::new();
    let reversed: Vec<usize> = w.iter().rev().copied().collect();
    for seq in [w, reversed.as_slice()] {
        for reflect in [false, true] {
            let image: Vec<usize> = seq
                .iter()
                .map(|&x| if reflect { n + 1 - x } else { x })
                .collect();
            if image.first().is_some_and(|x| x % 2 == 1) {
                out.push(image);
            }
        }
    }
    out
}

/// Least odd-start image of `w`.
pub fn canonical_visitation(w: &[usize]) -> Vec<usize> {
    visitation_orbit(w).into_iter().min().unwrap_or_default()
}

pub fn is_canonical_visitation(w: &[usize]) -> bool {
    canonical_visitation(w) == w
}
