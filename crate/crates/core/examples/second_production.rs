//! The second production matrix and the array it produces, checked against
//! the closed form `((x/f), x (x/f))^{-1} * (g, f)`.
//!
//! Run with `cargo run --example second_production`.

use riordan::families::a085478_element;
use riordan::production::{
    generate_from_production, nth_az, nth_production_matrix, produced_matrix_closed_form, row_stripped_product,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = a085478_element(12);
    println!("M^-1 times M with two rows removed:\n{}", row_stripped_product(&e, 2, 7, 7)?);

    let p2 = nth_production_matrix(&e, 2, 7)?;
    println!("second production matrix (first column dropped):\n{p2}");
    let (a, z) = nth_az(&e, 2)?;
    println!("A = {a}\nZ = {z}\n");

    let produced = generate_from_production(&p2, 6)?;
    println!("produced matrix:\n{produced}");
    let closed = produced_matrix_closed_form(&e, 2)?.matrix(6)?;
    println!("equals the closed form: {}", produced == closed);
    Ok(())
}
