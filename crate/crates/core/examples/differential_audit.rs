//! Sweep every crossing Gauss code up to a size and compare the smoothing
//! decider with the face-counting oracle.

use gauss_meander::realize::audit;
use gauss_meander::Limits;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let summary = audit(2, max, &Limits::from_env())?;
    for (n, count) in &summary.checked {
        println!("n = {n}: {count} codes");
    }
    println!(
        "{} codes checked, {} disagreements",
        summary.total_checked(),
        summary.disagreements.len()
    );
    if let Some(first) = summary.minimal_counterexample() {
        println!(
            "smallest: {} ({} vs {})",
            first.code, first.thm34, first.oracle
        );
    }
    Ok(())
}
