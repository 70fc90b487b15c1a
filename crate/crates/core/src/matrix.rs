//! Dense exact matrices and the text/JSON renderings shared by every
//! matrix-valued result.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::series::{format_coefficient, format_coefficient_exact, parse_coefficient, Coefficient};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Coefficient>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Coefficient::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Coefficient::from_integer(1.into()));
        }
        m
    }

    /// Builds from ragged rows; missing trailing entries are zero.
    pub fn from_rows(rows: &[Vec<Coefficient>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate().take(cols) {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Square matrix from ragged integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n, n);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, Coefficient::from_integer((*v).into()));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coefficient {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Coefficient) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Coefficient] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Coefficient> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Top-left `rows x cols` block.
    pub fn block(&self, rows: usize, cols: usize) -> Self {
        assert!(rows <= self.rows && cols <= self.cols);
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            m.entries[i * cols..(i + 1) * cols].clone_from_slice(&self.row(i)[..cols]);
        }
        m
    }

    /// Rows `start..start+rows`, columns `col_start..col_start+cols`.
    pub fn submatrix(&self, start: usize, rows: usize, col_start: usize, cols: usize) -> Self {
        assert!(start + rows <= self.rows && col_start + cols <= self.cols);
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            let src = self.row(start + i);
            m.entries[i * cols..(i + 1) * cols].clone_from_slice(&src[col_start..col_start + cols]);
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// Zero above the first superdiagonal.
    pub fn is_lower_hessenberg(&self) -> bool {
        (0..self.rows).all(|i| ((i + 2)..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|c| c.is_integer())
    }

    /// First entry where the two matrices differ, in row-major order.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((self.rows.min(other.rows), self.cols.min(other.cols)));
        }
        self.entries.iter().zip(&other.entries).position(|(a, b)| a != b).map(|p| (p / self.cols, p % self.cols))
    }

    /// Entries as text. Integers print bare when the whole matrix is integral,
    /// otherwise every entry prints as `num/den`.
    pub fn text_cells(&self) -> Vec<Vec<String>> {
        let integral = self.is_integral();
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|c| if integral { format_coefficient(c) } else { format_coefficient_exact(c) })
                    .collect()
            })
            .collect()
    }

    /// JSON form: array of rows of `"num/den"` strings.
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson((0..self.rows).map(|i| self.row(i).iter().map(format_coefficient_exact).collect()).collect())
    }

    pub fn from_json(json: &MatrixJson) -> Option<Self> {
        let rows = json.0.len();
        let cols = json.0.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (i, row) in json.0.iter().enumerate() {
            if row.len() != cols {
                return None;
            }
            for (j, cell) in row.iter().enumerate() {
                m.set(i, j, parse_coefficient(cell)?);
            }
        }
        Some(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatrixJson(pub Vec<Vec<String>>);

/// Left-aligned columns, one row per line.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.text_cells();
        let widths: Vec<usize> = (0..self.cols).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}
