//! Smooth each chord of a diagram and compare the rewritten word with the
//! toggled interlacement matrix.

use gauss_meander::gauss::canonicalize;
use gauss_meander::ChordDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "abacbc".into());
    let d = ChordDiagram::parse(&text)?;
    println!(
        "{} with interlacement\n{}",
        d.code(),
        d.interlacement_matrix()
    );
    for c in 0..d.n() {
        let rewritten = d.smooth_index(c)?;
        let toggled = d.smoothed_interlacement(c)?;
        let agree = rewritten.interlacement_for_labels(&d.labels_without(c)) == Some(toggled);
        println!(
            "smooth {}: {} (canonical {}), routes agree: {agree}",
            d.label(c),
            rewritten.code(),
            canonicalize(rewritten.code()),
        );
    }
    Ok(())
}
