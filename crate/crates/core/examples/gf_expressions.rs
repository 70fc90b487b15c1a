//! Parsing and evaluating generating-function expressions.
//!
//! Run with `cargo run --example gf_expressions -- "x*c(-x)^2"`.

use riordan::gfexpr::{evaluate, parse};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        ["1/(1-x)", "x/(1-x)^2", "c(x)^2", "(1-sqrt(1-4*x))/(2*x)", "(1+4*x+2*x^2-(1+2*x)*sqrt(1+4*x))/(2*x^3)"]
            .map(String::from)
            .to_vec()
    } else {
        inputs
    };
    for text in &inputs {
        match parse(text).and_then(|e| evaluate(&e, 8).map(|s| (e, s))) {
            Ok((e, s)) => println!("{e}\n  = {s}"),
            Err(err) => println!("{text}\n  error: {err}"),
        }
    }
    Ok(())
}
