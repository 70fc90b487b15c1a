//! Exact computation with Riordan arrays.
//!
//! A Riordan array is the lower-triangular matrix `M[n][k] = [x^n] g(x) f(x)^k`
//! of a pair of power series `(g, f)` with `g(0) != 0`, `f(0) = 0` and
//! `f'(0) != 0`. This crate works over exact rationals at finite truncation
//! and covers:
//!
//! - [`series`]: truncated power series (arithmetic, composition, reversion, square roots)
//! - [`gfexpr`]: a text syntax for generating functions such as `x/(1-x)^2`
//! - [`riordan`]: group elements, their matrices, the group law, A- and Z-sequences
//! - [`production`]: production matrices of every order and their closed forms
//! - [`families`]: Pascal, binomial powers, the Catalan array, moment arrays and
//!   their orthogonal polynomials
//! - [`oeis`]: identification against a local OEIS "stripped" dump
//!
//! ```
//! use riordan::families::a085478_element;
//! use riordan::production::{generate_from_production, nth_production_matrix};
//!
//! let m = a085478_element(10);
//! let p2 = nth_production_matrix(&m, 2, 6).unwrap();
//! let produced = generate_from_production(&p2, 4).unwrap();
//! assert_eq!(produced.to_string(), "1   0   0   0\n3   1   0   0\n12  7   1   0\n55  42  11  1\n");
//! ```

pub mod cli;
pub mod families;
pub mod gfexpr;
pub mod matrix;
pub mod oeis;
pub mod production;
pub mod riordan;
pub mod series;

pub use families::Family;
pub use matrix::Matrix;
pub use production::{ProductionMatrix, VerificationReport};
pub use riordan::{RiordanElement, TriMatrix};
pub use series::{Coefficient, TruncatedSeries};
