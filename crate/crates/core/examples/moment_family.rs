//! The moment arrays `M(r)`, their tridiagonal production matrices and the
//! orthogonal polynomials whose coefficients form `M(r)^{-1}`.
//!
//! Run with `cargo run --example moment_family -- 2` (the argument is `r`, default 1).

use riordan::families::{moment_array, moment_element, orthogonal_polys, PolynomialRow};
use riordan::production::production_matrix;
use riordan::series::parse_coefficient;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1".to_string());
    let r = parse_coefficient(&arg).ok_or_else(|| format!("'{arg}' is not a rational number"))?;

    println!("M({arg}):\n{}", moment_array(&r, 6));
    println!("production matrix:\n{}", production_matrix(&moment_element(&r, 10), 6)?);

    let polys = orthogonal_polys(&r, 6);
    for (n, p) in polys.iter().enumerate() {
        println!("P_{n}(x) = {p}");
    }
    let residuals_vanish = (2..polys.len())
        .all(|n| PolynomialRow::recurrence_residual(&r, &polys[n], &polys[n - 1], &polys[n - 2]).degree().is_none());
    println!("\nP_n = (x - 2r) P_(n-1) - r^2 P_(n-2) holds: {residuals_vanish}");
    Ok(())
}
