//! Inversion sets, their validity test, and braid words in which every pair
//! of strands crosses at most once.

use gauss_meander::braid::{
    inversion_set, is_valid_inversion_set, nonrepeating_braid_word, permutation_from_inversions,
    simulate_braid, InversionSet, Permutation,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pi = Permutation::parse(
        &std::env::args()
            .nth(1)
            .unwrap_or_else(|| "4 2 6 1 5 3".into()),
    )?;
    let r = inversion_set(&pi);
    println!("π = {pi}\nR(π) = {r} ({} pairs)", r.len());
    println!("rebuilt from R: {}", permutation_from_inversions(&r)?);

    let word = nonrepeating_braid_word(&pi);
    let (_, crossings) = simulate_braid(pi.n(), &word);
    println!(
        "braid word {word}, crossings per pair {:?}",
        crossings.values().collect::<Vec<_>>()
    );

    for pairs in [
        vec![(1, 2)],
        vec![(1, 3)],
        vec![(1, 2), (2, 3)],
        vec![(1, 2), (1, 3)],
    ] {
        let r = InversionSet::new(3, pairs.iter().copied())?;
        println!("{r} valid: {}", is_valid_inversion_set(&r));
    }
    Ok(())
}
