//! When a board has a nontrivial kernel every solution comes in a family
//! of 2^nullity. This walks the whole family for the 5×5 board.

use lightsout::generators::{grid, GridSpec};
use lightsout::solver::{count_solutions, minimal_clicks, solve_lights_out, Puzzle};
use lightsout::BitVec;

fn main() -> lightsout::Result<()> {
    let board = grid(&GridSpec::new(vec![5, 5]))?;
    let state: BitVec = "1000001000001000001000001".parse()?;
    let p = Puzzle::new(board.clone(), state)?;

    let count = count_solutions(&p, &BitVec::zeros(25))?;
    println!(
        "diagonal pattern: solvable {}, {:?} solutions",
        count.solvable,
        count.as_u128()
    );

    let canonical = solve_lights_out(&p)?.expect("solvable");
    println!("canonical: {canonical} (weight {})", canonical.weight());

    let a = board.adjacency_matrix();
    let set = a.solution_set(p.state())?.expect("solvable");
    for x in set.members() {
        println!("  member:  {x} (weight {})", x.weight());
    }

    let best = minimal_clicks(&p, &BitVec::zeros(25), 20)?.expect("solvable");
    println!(
        "minimal:   {} (weight {}, exhaustive {})",
        best.clicks,
        best.clicks.weight(),
        best.minimal
    );

    // with a zero budget the search is skipped
    let quick = minimal_clicks(&p, &BitVec::zeros(25), 0)?.expect("solvable");
    println!("budget 0:  {} (exhaustive {})", quick.clicks, quick.minimal);

    let single = Puzzle::new(board, BitVec::unit(25, 0))?;
    println!(
        "one corner lamp solvable: {}",
        solve_lights_out(&single)?.is_some()
    );
    Ok(())
}
