use std::fmt;

use super::IntScalar;
use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix<I> {
    rows: usize,
    cols: usize,
    data: Vec<I>,
}

impl<I: IntScalar> IntMatrix<I> {
    pub fn new(rows: usize, cols: usize, data: Vec<I>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Argument("matrix dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Argument(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<I>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Argument("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<I>]) -> Result<Self> {
        let ncols = columns.len();
        let nrows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != nrows) {
            return Err(Error::Argument("columns of unequal length".into()));
        }
        let data = (0..nrows)
            .flat_map(|i| columns.iter().map(move |c| c[i].clone()))
            .collect();
        Self::new(nrows, ncols, data)
    }

    /// `s·I_n`.
    pub fn scalar_identity(n: usize, s: I) -> Result<Self> {
        let data = (0..n * n)
            .map(|k| if k / n == k % n { s.clone() } else { I::zero() })
            .collect();
        Self::new(n, n, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &I {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[I] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<I> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<I>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// `[self | col]`.
    pub fn append_column(&self, col: &[I]) -> Result<Self> {
        if col.len() != self.rows {
            return Err(Error::Dimension {
                expected: self.rows,
                found: col.len(),
            });
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + 1));
        for (i, x) in col.iter().enumerate() {
            data.extend_from_slice(self.row(i));
            data.push(x.clone());
        }
        Self::new(self.rows, self.cols + 1, data)
    }

    /// Square submatrix on the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<I>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect()
    }
}

impl<I: IntScalar + fmt::Display> fmt::Display for IntMatrix<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
