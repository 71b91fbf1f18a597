//! Triangular and hexagonal boards, and an irregular board cut out of a
//! square grid with a mask.

use std::collections::BTreeSet;

use lightsout::generators::{
    grid, hexagonal_lattice, mask_subgraph, triangular_lattice, GridSpec, SelfAffect,
};
use lightsout::solver::analyze;
use lightsout::Graph;

fn report(name: &str, g: &Graph) {
    let a = analyze(g);
    println!(
        "{name:<22} {:4} vertices {:4} edges  rank {:4}  nullity {}",
        g.n_vertices(),
        g.edges().len(),
        a.rank,
        a.nullity
    );
}

fn main() -> lightsout::Result<()> {
    for rows in 1..=6 {
        report(
            &format!("triangle, {rows} rows"),
            &triangular_lattice(rows, SelfAffect::All)?,
        );
    }
    for radius in 0..=4 {
        report(
            &format!("hexagon, radius {radius}"),
            &hexagonal_lattice(radius, SelfAffect::All)?,
        );
    }

    // a plus sign inside a 7×7 square
    let square = grid(&GridSpec::new(vec![7, 7]))?;
    let plus: BTreeSet<usize> = (0..49)
        .filter(|v| (2..5).contains(&(v / 7)) || (2..5).contains(&(v % 7)))
        .collect();
    let shape = mask_subgraph(&square, &plus)?;
    report("plus inside 7x7", &shape);
    if let Some(labels) = shape.labels() {
        let names: Vec<_> = labels
            .iter()
            .take(6)
            .filter_map(|l| l.name.as_deref())
            .collect();
        println!("first cells keep their labels: {names:?}");
    }
    Ok(())
}
