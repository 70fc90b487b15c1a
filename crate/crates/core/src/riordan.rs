//! Riordan group elements `(g, f)` and their lower-triangular matrices.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::{Matrix, MatrixJson};
use crate::series::{Coefficient, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiordanError {
    #[error("invalid Riordan element: {0}")]
    InvalidElement(&'static str),
    #[error("invalid A-sequence: constant term must be nonzero")]
    InvalidASequence,
    #[error("insufficient precision: needs series order at least {needed}, have {available}")]
    Precision { needed: usize, available: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a lower-triangular matrix")]
    NotLowerTriangular,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A square lower-triangular exact matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix(Matrix);

impl TriMatrix {
    pub fn new(m: Matrix) -> Result<Self, RiordanError> {
        if m.rows() != m.cols() || !m.is_lower_triangular() {
            return Err(RiordanError::NotLowerTriangular);
        }
        Ok(Self(m))
    }

    pub fn identity(size: usize) -> Self {
        Self(Matrix::identity(size))
    }

    /// Square matrix from ragged integer rows (row `n` lists entries `0..=n`).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::new(Matrix::from_int_rows(rows)).expect("ragged rows give a lower-triangular matrix")
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, n: usize, k: usize) -> &Coefficient {
        self.0.get(n, k)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Leading `size x size` block.
    pub fn truncate(&self, size: usize) -> Self {
        Self(self.0.block(size, size))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    /// Inverse by forward substitution.
    pub fn inverse(&self) -> Result<Self, RiordanError> {
        let n = self.size();
        if (0..n).any(|i| self.get(i, i).is_zero()) {
            return Err(RiordanError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for j in 0..n {
            inv.set(j, j, self.get(j, j).recip());
            for i in (j + 1)..n {
                let mut acc = Coefficient::zero();
                for l in j..i {
                    let a = self.get(i, l);
                    if !a.is_zero() {
                        acc += a * inv.get(l, j);
                    }
                }
                inv.set(i, j, -acc / self.get(i, i));
            }
        }
        Ok(Self(inv))
    }

    /// Entries of the lower triangle read by rows, row 0 first.
    pub fn lower_triangle(&self) -> Vec<Coefficient> {
        (0..self.size()).flat_map(|n| self.0.row(n)[..=n].to_vec()).collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        self.0.to_json()
    }
}

impl fmt::Display for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element `(g, f)` of the Riordan group, truncated at a common order.
///
/// Requires `g_0 != 0`, `f_0 = 0` and `f_1 != 0`. Normalization `g_0 = f_1 = 1`
/// is not assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct RiordanElement {
    g: TruncatedSeries,
    f: TruncatedSeries,
}

impl RiordanElement {
    /// Validates `(g, f)`. Operands of different orders are cut to the smaller one.
    pub fn new(g: TruncatedSeries, f: TruncatedSeries) -> Result<Self, RiordanError> {
        let order = g.order().min(f.order());
        let (g, f) = (g.truncate(order), f.truncate(order));
        if g.coeffs()[0].is_zero() {
            return Err(RiordanError::InvalidElement("g_0 must be nonzero"));
        }
        if !f.coeffs()[0].is_zero() {
            return Err(RiordanError::InvalidElement("f_0 must be zero"));
        }
        if order == 0 {
            return Err(RiordanError::InvalidElement("f_1 is unknown at order 0"));
        }
        if f.coeffs()[1].is_zero() {
            return Err(RiordanError::InvalidElement("f_1 must be nonzero"));
        }
        Ok(Self { g, f })
    }

    pub fn identity(order: usize) -> Self {
        Self::new(TruncatedSeries::one(order), TruncatedSeries::x(order)).expect("identity is valid")
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn truncate(&self, order: usize) -> Result<Self, RiordanError> {
        Self::new(self.g.truncate(order), self.f.truncate(order))
    }

    pub fn is_normalized(&self) -> bool {
        self.g.coeffs()[0].is_one() && self.f.coeffs()[1].is_one()
    }

    /// Fails unless the element is known to at least `needed`.
    pub fn require_order(&self, needed: usize) -> Result<(), RiordanError> {
        if self.order() < needed {
            return Err(RiordanError::Precision { needed, available: self.order() });
        }
        Ok(())
    }

    /// `M[n][k] = [x^n] g f^k` for `0 <= n, k < size`.
    pub fn matrix(&self, size: usize) -> Result<TriMatrix, RiordanError> {
        if size == 0 {
            return Ok(TriMatrix(Matrix::zeros(0, 0)));
        }
        self.require_order(size - 1)?;
        let order = size - 1;
        let f = self.f.truncate(order);
        let mut column = self.g.truncate(order);
        let mut m = Matrix::zeros(size, size);
        for k in 0..size {
            for n in k..size {
                m.set(n, k, column.coeffs()[n].clone());
            }
            column = column.mul(&f);
        }
        Ok(TriMatrix(m))
    }

    /// `(g, f) * (u, v) = (g u(f), v(f))`.
    pub fn group_mul(&self, other: &Self) -> Result<Self, RiordanError> {
        let g = self.g.mul(&other.g.compose(&self.f)?);
        let f = other.f.compose(&self.f)?;
        Self::new(g, f)
    }

    /// `(g, f)^{-1} = (1 / g(fbar), fbar)`.
    pub fn inverse(&self) -> Result<Self, RiordanError> {
        let fbar = self.f.revert()?;
        let g = self.g.compose(&fbar)?.recip()?;
        Self::new(g, fbar)
    }

    /// The action `(g, f) . h = g h(f)`.
    pub fn ftra_apply(&self, h: &TruncatedSeries) -> Result<TruncatedSeries, RiordanError> {
        Ok(self.g.mul(&h.compose(&self.f)?))
    }

    /// `A = x / fbar`.
    pub fn a_sequence(&self) -> Result<TruncatedSeries, RiordanError> {
        Ok(self.shifted_az(1)?.0)
    }

    /// `Z = (1 / fbar) (1 - g_0 / g(fbar))`; reduces to the usual form when `g_0 = 1`.
    pub fn z_sequence(&self) -> Result<TruncatedSeries, RiordanError> {
        Ok(self.shifted_az(1)?.1)
    }

    /// A- and Z-series of the matrix obtained by deleting the top `n` rows of
    /// `M`, multiplying by `M^{-1}` and deleting the leftmost `n - 1` columns.
    ///
    /// `A = x^n / fbar^n` and `Z = x^{n-1} / fbar^n - g_0 f_1^{n-1} / (fbar g(fbar))`.
    /// Both terms of `Z` have a simple pole that cancels, so the difference is
    /// formed on `fbar / x` and shifted down once.
    pub(crate) fn shifted_az(&self, n: usize) -> Result<(TruncatedSeries, TruncatedSeries), RiordanError> {
        assert!(n >= 1, "shift count must be at least one");
        self.require_order(2)?;
        let fbar = self.f.revert()?;
        let phi = fbar.shift_down(1)?;
        let g_at_fbar = self.g.compose(&fbar)?;
        let exponent = i64::try_from(n).expect("shift count fits in i64");
        let a = phi.pow(-exponent)?;
        let scale = &self.g.coeffs()[0] * self.f.coeffs()[1].pow(exponent as i32 - 1);
        let pole_term = phi.mul(&g_at_fbar).recip()?.scale(&scale);
        let z = a.sub(&pole_term).shift_down(1)?;
        Ok((a, z))
    }

    /// The element `(1 - x Z / A, x / A)^{-1}` whose production matrix has the
    /// given A- and Z-sequences.
    pub fn from_az(a: &TruncatedSeries, z: &TruncatedSeries) -> Result<Self, RiordanError> {
        if a.coeffs()[0].is_zero() {
            return Err(RiordanError::InvalidASequence);
        }
        let a_inv = a.recip()?;
        let order = a.order().min(z.order()) + 1;
        let f = a_inv.shift_up(1).truncate(order);
        let g = TruncatedSeries::one(order).sub(&z.mul(&a_inv).shift_up(1));
        Self::new(g, f)?.inverse()
    }
}

impl fmt::Display for RiordanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.f)
    }
}
