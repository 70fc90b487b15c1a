//! Production matrices of every order.
//!
//! The `n`-th production matrix of a Riordan array `M` is `M^{-1}` times `M`
//! with its top `n` rows deleted, with the leftmost `n - 1` columns then
//! deleted. For `n = 1` this is the classical production matrix `M^{-1} M̄`.
//! Each such matrix is lower Hessenberg and produces a new Riordan array,
//! which has the closed form
//! `((x/f)^{n-1}, x (x/f)^{n-1})^{-1} * (g, f)`; that statement is proved for
//! `n = 2, 3` and checked here instance by instance for larger `n`.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::matrix::{Matrix, MatrixJson};
use crate::riordan::{RiordanElement, RiordanError, TriMatrix};
use crate::series::{format_coefficient_exact, Coefficient, SeriesError, TruncatedSeries};

/// Above this display size the series path is used for `nth_production_matrix`.
pub const SERIES_PATH_THRESHOLD: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductionError {
    #[error("production order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("matrix is not lower Hessenberg")]
    NotHessenberg,
    #[error("production matrix has {have} rows, {need} needed")]
    TooSmall { have: usize, need: usize },
    #[error(transparent)]
    Riordan(#[from] RiordanError),
}

impl From<SeriesError> for ProductionError {
    fn from(e: SeriesError) -> Self {
        Self::Riordan(e.into())
    }
}

/// A square lower-Hessenberg exact matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductionMatrix(Matrix);

impl ProductionMatrix {
    pub fn new(m: Matrix) -> Result<Self, ProductionError> {
        if m.rows() != m.cols() || !m.is_lower_hessenberg() {
            return Err(ProductionError::NotHessenberg);
        }
        Ok(Self(m))
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, ProductionError> {
        Self::new(Matrix::from_int_rows(rows))
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        self.0.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    /// Column 0: `z_0, z_1, ...`.
    pub fn z_column(&self) -> Vec<Coefficient> {
        self.0.column(0)
    }

    /// Column 1: `a_0, a_1, ...` (empty for a 1x1 matrix).
    pub fn a_column(&self) -> Vec<Coefficient> {
        if self.size() < 2 {
            return Vec::new();
        }
        self.0.column(1)
    }

    /// Whether every column `k >= 1` is column 1 pushed down by `k - 1` rows.
    pub fn has_riordan_shape(&self) -> bool {
        let n = self.size();
        (2..n).all(|k| (k - 1..n).all(|i| self.get(i, k) == self.get(i + 1 - k, 1)))
    }

    pub fn superdiagonal(&self) -> Vec<Coefficient> {
        (0..self.size().saturating_sub(1)).map(|i| self.get(i, i + 1).clone()).collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        self.0.to_json()
    }
}

impl fmt::Display for ProductionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `M^{-1}` times `M` with the top `rows_removed` rows deleted, `size x cols`.
///
/// Needs the element to order `max(size + rows_removed, cols) - 1`.
pub fn row_stripped_product(
    e: &RiordanElement,
    rows_removed: usize,
    size: usize,
    cols: usize,
) -> Result<Matrix, ProductionError> {
    let full = e.matrix((size + rows_removed).max(cols))?;
    let inv = full.truncate(size).inverse()?;
    let stripped = full.as_matrix().submatrix(rows_removed, size, 0, cols);
    Ok(inv.as_matrix().mul(&stripped))
}

fn check_order(n: usize) -> Result<(), ProductionError> {
    if n == 0 {
        return Err(ProductionError::InvalidOrder(n));
    }
    Ok(())
}

/// Classical production matrix `P = M^{-1} M̄`.
pub fn production_matrix(e: &RiordanElement, size: usize) -> Result<ProductionMatrix, ProductionError> {
    nth_production_matrix(e, 1, size)
}

/// `n`-th production matrix; the matrix path for small sizes, the series path beyond
/// [`SERIES_PATH_THRESHOLD`].
pub fn nth_production_matrix(e: &RiordanElement, n: usize, size: usize) -> Result<ProductionMatrix, ProductionError> {
    if size > SERIES_PATH_THRESHOLD {
        nth_production_matrix_via_series(e, n, size)
    } else {
        nth_production_matrix_via_matrices(e, n, size)
    }
}

/// Explicit matrix arithmetic on the truncation.
pub fn nth_production_matrix_via_matrices(
    e: &RiordanElement,
    n: usize,
    size: usize,
) -> Result<ProductionMatrix, ProductionError> {
    check_order(n)?;
    e.require_order(size + n - 1)?;
    let product = row_stripped_product(e, n, size, size + n - 1)?;
    ProductionMatrix::new(product.submatrix(0, size, n - 1, size))
}

/// Column generating functions: the column of `M` for `g f^k` with its
/// first `n` rows deleted is `(g f^k - τ_n(g f^k)) / x^n`, where `τ_n` keeps
/// the terms below `x^n`. Multiplying by `M^{-1}` is the action of
/// `(g, f)^{-1}` on that series.
pub fn nth_production_matrix_via_series(
    e: &RiordanElement,
    n: usize,
    size: usize,
) -> Result<ProductionMatrix, ProductionError> {
    check_order(n)?;
    e.require_order(size + n - 1)?;
    let inverse = e.inverse()?;
    let mut column = e.g().mul(&e.f().pow((n - 1) as i64)?);
    let mut m = Matrix::zeros(size, size);
    for j in 0..size {
        let mut tail = column.clone().into_coeffs();
        for c in tail.iter_mut().take(n) {
            *c = Coefficient::from_integer(0.into());
        }
        let h = TruncatedSeries::from_coeffs(tail).shift_down(n)?;
        let produced = inverse.ftra_apply(&h)?;
        for (i, c) in produced.coeffs().iter().take(size).enumerate() {
            m.set(i, j, c.clone());
        }
        column = column.mul(e.f());
    }
    ProductionMatrix::new(m)
}

/// Rows of the matrix produced by `p`: row 0 is `(1, 0, ...)` and
/// `row_{i+1} = row_i * P`.
pub fn generate_from_production(p: &ProductionMatrix, size: usize) -> Result<TriMatrix, ProductionError> {
    if p.size() < size {
        return Err(ProductionError::TooSmall { have: p.size(), need: size });
    }
    let mut m = Matrix::zeros(size, size);
    if size == 0 {
        return Ok(TriMatrix::new(m)?);
    }
    m.set(0, 0, Coefficient::from_integer(1.into()));
    for i in 1..size {
        for k in 0..=i {
            let mut acc = Coefficient::from_integer(0.into());
            // row i-1 is zero past column i-1, P is zero past the superdiagonal
            for l in k.saturating_sub(1)..i {
                acc += m.get(i - 1, l) * p.get(l, k);
            }
            m.set(i, k, acc);
        }
    }
    Ok(TriMatrix::new(m)?)
}

/// A- and Z-series of the `n`-th production matrix:
/// `A = x^n / fbar^n`, `Z = x^{n-1} / fbar^n - g_0 f_1^{n-1} / (fbar g(fbar))`.
pub fn nth_az(e: &RiordanElement, n: usize) -> Result<(TruncatedSeries, TruncatedSeries), ProductionError> {
    check_order(n)?;
    Ok(e.shifted_az(n)?)
}

/// The element produced by the `n`-th production matrix, in closed form:
/// `((x/f)^{n-1}, x (x/f)^{n-1})^{-1} * (g, f)`.
///
/// For `n >= 2` the result is one order short of `e`, since `x/f` is.
pub fn produced_matrix_closed_form(e: &RiordanElement, n: usize) -> Result<RiordanElement, ProductionError> {
    check_order(n)?;
    if n == 1 {
        return Ok(e.clone());
    }
    let x_over_f = e.f().shift_down(1)?.recip()?;
    let power = x_over_f.pow((n - 1) as i64)?;
    let left = RiordanElement::new(power.clone(), power.shift_up(1))?;
    Ok(left.inverse()?.group_mul(e)?)
}

/// Same element through `fbar`: `(fbar^{n-1} / (x^{n-1} g(fbar)), fbar^n / x^{n-1})^{-1}`.
pub fn produced_matrix_via_reversion(e: &RiordanElement, n: usize) -> Result<RiordanElement, ProductionError> {
    check_order(n)?;
    let fbar = e.f().revert()?;
    let phi = fbar.shift_down(1)?;
    let g_at_fbar = e.g().compose(&fbar)?;
    let exponent = (n - 1) as i64;
    let g = phi.pow(exponent)?.div(&g_at_fbar)?;
    let f = phi.pow(exponent + 1)?.shift_up(1);
    Ok(RiordanElement::new(g, f)?.inverse()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub produced: String,
    pub closed_form: String,
}

/// Outcome of comparing the matrix generated by the `n`-th production matrix
/// with the closed form. A disagreement is data, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub size: usize,
    pub g: Vec<String>,
    pub f: Vec<String>,
    #[serde(serialize_with = "serialize_tri")]
    pub produced: TriMatrix,
    #[serde(serialize_with = "serialize_tri")]
    pub closed_form: TriMatrix,
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
}

fn serialize_tri<S: Serializer>(m: &TriMatrix, s: S) -> Result<S::Ok, S::Error> {
    m.to_json().serialize(s)
}

pub fn verify_nth_conjecture(e: &RiordanElement, n: usize, size: usize) -> Result<VerificationReport, ProductionError> {
    let p = nth_production_matrix(e, n, size)?;
    let produced = generate_from_production(&p, size)?;
    // the closed form loses one order, so order `size` is all it needs
    let closed_form = produced_matrix_closed_form(&e.truncate(size.max(2))?, n)?.matrix(size)?;
    let first_mismatch = produced.as_matrix().first_difference(closed_form.as_matrix()).map(|(row, col)| Mismatch {
        row,
        col,
        produced: format_coefficient_exact(produced.get(row, col)),
        closed_form: format_coefficient_exact(closed_form.get(row, col)),
    });
    Ok(VerificationReport {
        n,
        size,
        g: e.g().coeffs().iter().map(format_coefficient_exact).collect(),
        f: e.f().coeffs().iter().map(format_coefficient_exact).collect(),
        produced,
        closed_form,
        equal: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Verifies several production orders concurrently; results come back in input order.
pub fn verify_orders(
    e: &RiordanElement,
    orders: &[usize],
    size: usize,
) -> Vec<Result<VerificationReport, ProductionError>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = orders.iter().map(|&n| scope.spawn(move || verify_nth_conjecture(e, n, size))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    })
}
