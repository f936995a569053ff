//! Recognise a meander matrix, recover its visitation order and arcs, and
//! encode it back.

use gauss_meander::meander::{encode_meander, is_meander_matrix, reconstruct_meander};
use gauss_meander::BitMatrix;

const ROWS: [[u8; 7]; 7] = [
    [0, 1, 1, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 1, 1, 1],
    [1, 0, 0, 1, 0, 1, 1],
    [1, 0, 0, 1, 1, 0, 1],
    [1, 1, 1, 1, 1, 1, 0],
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = BitMatrix::from_fn(7, |i, j| ROWS[i][j] == 1)?;
    let check = is_meander_matrix(&m)?;
    println!(
        "{m}meander matrix: {} (both forms agree: {})",
        check.holds(),
        check.forms_agree()
    );
    let rec = reconstruct_meander(&m)?;
    println!("visitation {:?}", rec.visitation());
    println!("upper arcs {:?}", rec.upper());
    println!("lower arcs {:?}", rec.lower());
    println!("Gauss code {}", rec.gauss_code());
    rec.verify(8)?;
    println!("re-encodes identically: {}", encode_meander(&rec) == m);
    Ok(())
}
