//! The classic game: every cell toggles itself and its four neighbours.
//! Prints rank and nullity for square boards, then a drawing of the
//! lightest way to switch every lamp on the 5×5 board.

use lightsout::generators::{grid, GridSpec};
use lightsout::solver::{analyze, minimal_clicks, Puzzle};
use lightsout::BitVec;

fn draw(bits: &BitVec, width: usize) {
    for row in 0..bits.len() / width {
        let line: String = (0..width)
            .map(|c| if bits.get(row * width + c) { '#' } else { '.' })
            .collect();
        println!("    {line}");
    }
}

fn main() -> lightsout::Result<()> {
    println!(" k   rank  nullity  every state solvable");
    for k in 1..=12 {
        let a = analyze(&grid(&GridSpec::new(vec![k, k]))?);
        println!("{k:2}  {:5}  {:7}  {}", a.rank, a.nullity, a.nullity == 0);
    }

    let board = grid(&GridSpec::new(vec![5, 5]))?;
    let all_on = BitVec::ones(25);
    let m = minimal_clicks(&Puzzle::all_off(board), &all_on, 20)?.expect("always reachable");
    println!("\n5x5, all off -> all on: {} clicks", m.clicks.weight());
    draw(m.clicks.bits(), 5);
    Ok(())
}
