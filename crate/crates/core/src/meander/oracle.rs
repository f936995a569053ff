//! Direct search for closed meanders, independent of the tableau.

use crate::error::{LimitExceeded, MeanderError};
use crate::limits::Limits;
use crate::meander::reconstruct::MeanderReconstruction;
use crate::realize::oracle_realizable_with;

/// Every visitation order `w` of `1..N` that starts odd and alternates
/// parity, in lexicographic order, kept when `r 1 ... N r w` has genus 0.
pub fn oracle_enumerate_meanders(n: usize) -> Result<Vec<MeanderReconstruction>, MeanderError> {
    oracle_enumerate_meanders_with(n, &Limits::from_env())
}

pub fn oracle_enumerate_meanders_with(
    n: usize,
    limits: &Limits,
) -> Result<Vec<MeanderReconstruction>, MeanderError> {
    if n < 2 || n % 2 == 1 {
        return Err(MeanderError::InvalidN(n));
    }
    if n > limits.meander_oracle {
        return Err(LimitExceeded {
            what: "meander oracle N",
            value: n,
            max: limits.meander_oracle,
        }
        .into());
    }
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    search(n, &mut w, &mut used, &mut out);
    Ok(out)
}

fn search(n: usize, w: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<MeanderReconstruction>) {
    if w.len() == n {
        let rec = MeanderReconstruction::from_visitation(w.clone());
        // the code has N + 1 chords
        let verdict =
            oracle_realizable_with(&rec.gauss_code(), n + 1).expect("size checked by caller");
        if verdict.realizable {
            out.push(rec);
        }
        return;
    }
    let parity = if w.len().is_multiple_of(2) { 1 } else { 0 };
    for x in (1..=n).filter(|x| x % 2 == parity) {
        if used[x] {
            continue;
        }
        used[x] = true;
        w.push(x);
        search(n, w, used, out);
        w.pop();
        used[x] = false;
    }
}
