//! Count meander matrices by size with the propagating enumerator and the
//! direct geometric search, optionally one per symmetry class.

use std::collections::BTreeSet;
use std::time::Instant;

use gauss_meander::meander::{collect_meander_matrices, encode_meander, oracle_enumerate_meanders};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map_or(Ok(10), |s| s.parse())?;
    println!(
        "{:>3} {:>9} {:>9} {:>9} {:>10}",
        "N", "emitted", "classes", "search", "time"
    );
    for n in (2..=max).step_by(2) {
        let start = Instant::now();
        let all = collect_meander_matrices(n, &[], false)?;
        let elapsed = start.elapsed();
        let classes = collect_meander_matrices(n, &[], true)?.len();
        let search = if n <= 10 {
            let from_search: BTreeSet<_> = oracle_enumerate_meanders(n)?
                .iter()
                .map(|r| encode_meander(r).to_rows())
                .collect();
            let from_enum: BTreeSet<_> = all.iter().map(|e| e.matrix.to_rows()).collect();
            assert_eq!(from_search, from_enum, "N = {n}");
            from_search.len().to_string()
        } else {
            "-".into()
        };
        println!(
            "{n:>3} {:>9} {classes:>9} {search:>9} {elapsed:>10.2?}",
            all.len()
        );
    }
    Ok(())
}
