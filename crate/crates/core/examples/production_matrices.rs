//! A Riordan array, its production matrix, and the matrix rebuilt from it.
//!
//! Run with `cargo run --example production_matrices`.

use riordan::families::a085478_element;
use riordan::production::{generate_from_production, production_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = a085478_element(12);
    let m = e.matrix(7)?;
    println!("(1/(1-x), x/(1-x)^2):\n{m}");

    let p = production_matrix(&e, 7)?;
    println!("production matrix:\n{p}");
    println!("Z-sequence: {}", e.z_sequence()?);
    println!("A-sequence: {}\n", e.a_sequence()?);

    let rebuilt = generate_from_production(&p, 7)?;
    println!("rebuilt from the production matrix matches: {}", rebuilt == m);
    Ok(())
}
