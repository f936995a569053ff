//! Write SVG pictures of a chord diagram and of a meander.

use std::fs;
use std::path::PathBuf;

use gauss_meander::meander::MeanderReconstruction;
use gauss_meander::render::{render_chord_diagram, render_meander, RenderSpec};
use gauss_meander::ChordDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let chord = dir.join("chord.svg");
    let d = ChordDiagram::parse("abcdbadc")?;
    fs::write(
        &chord,
        render_chord_diagram(&d, &RenderSpec::chord_diagram()),
    )?;
    let meander = dir.join("meander.svg");
    let rec = MeanderReconstruction::from_visitation(vec![3, 4, 5, 2, 1, 6]);
    fs::write(&meander, render_meander(&rec, &RenderSpec::meander()))?;
    println!("wrote {} and {}", chord.display(), meander.display());
    Ok(())
}
