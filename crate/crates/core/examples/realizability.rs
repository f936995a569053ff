//! Decide planarity of a few Gauss codes with every available method.
//!
//! Pass codes on the command line, or run without arguments for a default set.

use gauss_meander::realize::{
    even_condition, matrix_conditions, oracle_realizable, theorem34_realizable,
};
use gauss_meander::ChordDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let codes = if args.is_empty() {
        ["aa", "abab", "abcabc", "abacbc", "abcdbadc"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for text in &codes {
        let d = ChordDiagram::parse(text)?;
        let oracle = oracle_realizable(d.code())?;
        let conditions = matrix_conditions(&d.interlacement_matrix())?;
        println!("{}", d.code());
        println!("  even condition   {}", even_condition(&d));
        println!("  smoothings       {}", theorem34_realizable(&d));
        println!(
            "  face count       genus {}, max χ {}",
            oracle.genus, oracle.max_euler
        );
        match conditions.violations.first() {
            None => println!("  matrix           all three conditions hold"),
            Some(v) => println!("  matrix           {v}"),
        }
    }
    Ok(())
}
