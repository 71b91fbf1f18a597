//! Green lamps toggle themselves when pressed, red lamps do not. Whatever
//! the coloring, pressing some set of buttons from the dark board lights
//! exactly the green lamps.

use lightsout::generators::{apply_coloring, grid, GridSpec, LampColoring};
use lightsout::solver::{analyze, apply_clicks, solve_corollary_target, Puzzle};

fn main() -> lightsout::Result<()> {
    let board = grid(&GridSpec::new(vec![5, 5]))?;
    let colorings = [
        ("all green", LampColoring::new(0..25)),
        ("all red", LampColoring::new([])),
        (
            "checkerboard",
            LampColoring::new((0..25).filter(|v| (v / 5 + v % 5) % 2 == 0)),
        ),
        ("corners", LampColoring::new([0, 4, 20, 24])),
    ];

    for (name, coloring) in colorings {
        let g = apply_coloring(&board, &coloring)?;
        let clicks = solve_corollary_target(&g)?;
        let lit = apply_clicks(&Puzzle::all_off(g.clone()), &clicks)?;
        assert_eq!(lit.state(), &g.self_loop_vector());
        println!("{name:>12}: press {clicks}  lit {}", lit.state());

        let a = analyze(&g);
        println!("{:>12}  rank {} nullity {}", "", a.rank, a.nullity);
    }
    Ok(())
}
