use lightsout::generators::{grid, GridSpec, SelfAffect};
use lightsout::solver::analyze;

type Variant = (&'static str, fn(usize) -> GridSpec);

// Nullity of the k×k board under each neighbourhood and boundary.
fn main() -> lightsout::Result<()> {
    let variants: [Variant; 5] = [
        ("grid", |k| GridSpec::new(vec![k, k])),
        ("torus", |k| GridSpec::new(vec![k, k]).wrap_all()),
        ("cylinder", |k| {
            GridSpec::new(vec![k, k]).wrap(vec![false, true])
        }),
        ("king", |k| GridSpec::new(vec![k, k]).diagonal(true)),
        ("torus/no-self", |k| {
            GridSpec::new(vec![k, k])
                .wrap_all()
                .self_affect(SelfAffect::None)
        }),
    ];

    print!("{:>14}", "k");
    for k in 2..=9 {
        print!("{k:4}");
    }
    println!();
    for (name, spec) in variants {
        print!("{name:>14}");
        for k in 2..=9 {
            print!("{:4}", analyze(&grid(&spec(k))?).nullity);
        }
        println!();
    }

    let cube = grid(&GridSpec::new(vec![3, 3, 3]))?;
    println!(
        "\n3x3x3 cube: {} vertices, {} edges, nullity {}",
        cube.n_vertices(),
        cube.edges().len(),
        analyze(&cube).nullity
    );
    Ok(())
}
