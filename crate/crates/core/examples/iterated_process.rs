//! Repeatedly replacing an array by the one its second production matrix
//! produces. Starting from Pascal's triangle the exponents double.
//!
//! Run with `cargo run --example iterated_process`.

use riordan::families::{iterate_second_production, pascal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let chain = iterate_second_production(&pascal(12), 3)?;
    for (step, e) in chain.iter().enumerate() {
        let inv = e.inverse()?;
        println!("step {step}: ({}, {})^-1", inv.g(), inv.f());
        println!("{}", e.matrix(6)?);
    }
    Ok(())
}
