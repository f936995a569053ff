//! Step-by-step construction of a 9×9 meander matrix, printing the tableau
//! after each choice and the rows that propagation rules out.

use gauss_meander::meander::{PartialMeanderMatrix, Propagation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut state = PartialMeanderMatrix::new(8)?;
    println!("start\n{state}");
    for m in [5, 2, 3] {
        let rejected: Vec<usize> = state
            .candidates()
            .into_iter()
            .filter(|&c| c != m && state.choose(c).is_none())
            .collect();
        println!("rows ruled out before choosing {m}: {rejected:?}");
        let filled = state.delta_fill(m)?;
        println!("after Δ-filling {m}\n{filled}");
        state = match filled.propagate() {
            Propagation::Feasible(next) => next,
            Propagation::Infeasible => return Err(format!("{m} is infeasible").into()),
        };
        println!(
            "after propagation (unknowns {:?})\n{state}",
            state.unknowns()
        );
    }
    for done in state.completions()? {
        println!(
            "completion with visitation {:?}\n{}",
            done.visitation, done.matrix
        );
    }
    Ok(())
}
