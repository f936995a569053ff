//! Look for a non-planar Gauss code whose interlacement matrix passes all
//! three matrix conditions, sweeping sizes upward.

use gauss_meander::gauss::enumerate_codes_with;
use gauss_meander::realize::{matrix_conditions, oracle_realizable_with};
use gauss_meander::{ChordDiagram, Limits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map_or(Ok(8), |s| s.parse())?;
    for n in 2..=max {
        let limits = Limits::uniform(max);
        let mut checked = 0usize;
        let mut found = None;
        for canon in enumerate_codes_with(n, true, &limits)? {
            checked += 1;
            let d = ChordDiagram::new(canon.into_code())?;
            if matrix_conditions(&d.interlacement_matrix())?.holds()
                && !oracle_realizable_with(d.code(), max)?.realizable
            {
                found = Some(d.code().to_string());
                break;
            }
        }
        match found {
            Some(code) => {
                println!("n = {n}: {code} is non-planar yet passes the matrix conditions");
                return Ok(());
            }
            None => println!("n = {n}: none among {checked} codes"),
        }
    }
    Ok(())
}
