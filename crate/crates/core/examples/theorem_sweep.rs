//! For a symmetric matrix over F2 the diagonal always lies in the column
//! space. This checks it on random matrices across several densities and
//! shows the witness for one small case.

use lightsout::theorem::{
    random_symmetric, sweep_density_grid, verify_column_sum_identity, verify_diagonal_in_range,
    RngSpec,
};

fn main() -> lightsout::Result<()> {
    let a = random_symmetric(6, &RngSpec::new(11, 0.5, 0.5)?);
    println!("A =\n{a}");
    let cert = verify_diagonal_in_range(&a)?;
    println!("diag(A) = {}", a.diagonal()?);
    println!(
        "witness = {}  A·witness = {}",
        cert.witness,
        a.mat_vec(&cert.witness)?
    );
    for x in a.nullspace_basis() {
        println!(
            "kernel vector {x}: diagonal over its support sums to 0: {}",
            verify_column_sum_identity(&a, &x)?
        );
    }

    let report = sweep_density_grid(24, 20, 2024, Some(12))?;
    print!("\n{}", report.summary_table());
    Ok(())
}
