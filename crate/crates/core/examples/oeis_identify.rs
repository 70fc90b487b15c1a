//! Identifying triangles and sequences against an OEIS stripped dump.
//!
//! Run with `cargo run --example oeis_identify -- path/to/stripped`; without an
//! argument it uses `$OEIS_STRIPPED_PATH`, then the bundled test fixture.

use std::path::PathBuf;

use num_bigint::BigInt;
use riordan::families::{a085478_element, catalan_array, pascal};
use riordan::oeis::{load_stripped, resolve_dump_path};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args_os().nth(1).map(PathBuf::from);
    let path = resolve_dump_path(arg.as_deref())
        .unwrap_or_else(|_| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/stripped"));
    let index = load_stripped(&path)?;
    println!("{} sequences loaded from {}", index.len(), path.display());

    for (name, e) in
        [("Pascal", pascal(10)), ("Catalan array", catalan_array(10)), ("(1/(1-x), x/(1-x)^2)", a085478_element(10))]
    {
        let found = index.identify_triangle(&e.matrix(8)?)?;
        let ids: Vec<&str> = found.iter().map(|m| m.a_number.as_str()).collect();
        println!("{name}: {ids:?}");
    }

    let catalan: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132].map(BigInt::from).to_vec();
    for m in index.identify_sequence(&catalan)? {
        println!("1, 1, 2, 5, 14, 42, 132: {} (offset {})", m.a_number, m.offset);
    }
    Ok(())
}
