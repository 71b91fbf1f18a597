//! Row reduction, rank, solving and nullspaces over F2, starting from the
//! plain-text matrix literal.

use lightsout::{BitVec, Gf2Matrix};

fn main() -> lightsout::Result<()> {
    let a: Gf2Matrix = "3 4\n1011\n0110\n1101\n".parse()?;
    println!("A =\n{a}");

    let (r, pivots) = a.rref();
    println!("rref(A) =\n{r}");
    println!("pivots {pivots:?}, rank {}", a.rank());

    for v in a.nullspace_basis() {
        println!("kernel vector {v}  A·v = {}", a.mat_vec(&v)?);
    }

    for rhs in ["110", "111"] {
        let b: BitVec = rhs.parse()?;
        match a.solution_set(&b)? {
            Some(set) => {
                println!("A·x = {b}: {} solutions", 1u64 << set.nullity());
                for x in set.members() {
                    println!("  {x}");
                }
            }
            None => println!("A·x = {b}: no solution"),
        }
    }

    let x = BitVec::from_indices(4, [0, 3])?;
    let y: BitVec = "1001".parse()?;
    println!("x·y = {}", u8::from(x.dot(&y)?));
    Ok(())
}
