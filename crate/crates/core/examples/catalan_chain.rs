//! Production matrices of every order for the Catalan array `(c(x), x c(x))`.
//! The `n`-th one produces `((1-x)^n, x (1-x)^n)^{-1}`.
//!
//! Run with `cargo run --example catalan_chain`.

use riordan::families::catalan_array;
use riordan::production::verify_orders;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = catalan_array(16);
    println!("Catalan array:\n{}", c.matrix(7)?);

    for report in verify_orders(&c, &[2, 3, 4], 7) {
        let report = report?;
        println!("order {}: produced matrix (equal to closed form: {})", report.n, report.equal);
        println!("{}", report.produced);
    }
    Ok(())
}
