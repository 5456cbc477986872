//! Dense matrices over the Gaussian rationals.
//!
//! Vectorization is column-stacking throughout: entry `(i, j)` of an
//! `n×n` matrix sits at index `j·n + i` of `vec(A)`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

type G = GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<G>,
}

impl Matrix {
    /// Wraps a row-major entry list.
    pub fn new(rows: usize, cols: usize, entries: Vec<G>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> G) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Row-major integer matrix, handy for literals.
    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        Self::new(rows, cols, values.iter().map(|&v| G::from(v)).collect())
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::size(format!("{c} columns"), format!("{} columns", bad.len())));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![G::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &G::one())
    }

    /// `c·I_n`.
    pub fn scalar(n: usize, c: &G) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { G::zero() })
    }

    /// The matrix unit `E_ij` in `M_n` (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.entries[i * n + j] = G::one();
        m
    }

    /// Standard basis column vector `e_k` in `ℂⁿ` (0-based).
    pub fn basis_vector(n: usize, k: usize) -> Self {
        let mut m = Self::zeros(n, 1);
        m.entries[k] = G::one();
        m
    }

    pub fn column_vector(values: Vec<G>) -> Self {
        let n = values.len();
        Matrix {
            rows: n,
            cols: 1,
            entries: values,
        }
    }

    pub fn row_vector(values: Vec<G>) -> Self {
        let n = values.len();
        Matrix {
            rows: 1,
            cols: n,
            entries: values,
        }
    }

    pub fn diagonal(values: Vec<G>) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (k, v) in values.into_iter().enumerate() {
            m.entries[k * n + k] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[G] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &G {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[G] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(G::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &G) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::size(self.shape_str(), other.shape_str()))
        }
    }

    fn shape_str(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::size(
                format!("{} rows on the right", self.cols),
                format!("{} rows", other.rows),
            ));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A − c·I`.
    pub fn shift(&self, c: &G) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut out = self.clone();
        for k in 0..n {
            out.entries[k * n + k] -= c;
        }
        Ok(out)
    }

    /// Column-stacking vectorization as an `rows·cols × 1` column.
    pub fn vectorize(&self) -> Matrix {
        Matrix::from_fn(self.rows * self.cols, 1, |k, _| {
            self.get(k % self.rows, k / self.rows).clone()
        })
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn unvectorize(v: &Matrix, rows: usize, cols: usize) -> Result<Matrix> {
        if v.cols != 1 || v.rows != rows * cols {
            return Err(Error::size(format!("{}x1", rows * cols), v.shape_str()));
        }
        Ok(Matrix::from_fn(rows, cols, |i, j| v.entries[j * rows + i].clone()))
    }

    /// Horizontal concatenation; all blocks must share a row count.
    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if let Some(bad) = blocks.iter().find(|b| b.rows != rows) {
            return Err(Error::size(format!("{rows} rows"), format!("{} rows", bad.rows)));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                entries.extend_from_slice(b.row(i));
            }
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Position and value of the first nonzero entry in column-major order.
    pub fn first_nonzero_column_major(&self) -> Option<(usize, usize, &G)> {
        (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| (i, j, self.get(i, j)))
            .find(|(_, _, v)| !v.is_zero())
    }

    /// Scales so the first nonzero entry in column-major order is 1.
    /// The zero matrix is returned unchanged.
    pub fn gauge_normalized(&self) -> Matrix {
        match self.first_nonzero_column_major() {
            Some((_, _, v)) => {
                let inv = v.inv().expect("nonzero");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        crate::elim::rref(self).rank
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = G;
    fn index(&self, (i, j): (usize, usize)) -> &G {
        self.get(i, j)
    }
}

// Operator forms panic on shape mismatch; the `try_*` methods do not.

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix add")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix sub")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix mul")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        f.write_str("]")
    }
}

/// Kronecker product: the `(i, j)` block is `A[i,j]·B`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
        a.get(r / b.rows, c / b.cols) * b.get(r % b.rows, c % b.cols)
    })
}

/// The `n²×n²` permutation `K` with `K·vec(A) = vec(Aᵀ)`.
pub fn commutation_matrix(n: usize) -> Matrix {
    let mut k = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            k.entries[(j * n + i) * n * n + (i * n + j)] = G::one();
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identity_and_scalar() {
        assert_eq!(kron(&Matrix::identity(2), &Matrix::identity(2)), Matrix::identity(4));
        let b = Matrix::from_ints(2, 3, &[1, 2, 3, 4, 5, 6]).unwrap();
        let two = Matrix::from_ints(1, 1, &[2]).unwrap();
        assert_eq!(kron(&two, &b), b.scale(&G::from(2)));
    }

    #[test]
    fn kron_block_formula() {
        let a = Matrix::from_ints(2, 2, &[1, 2, 3, 4]).unwrap();
        let x = Matrix::from_ints(2, 2, &[0, 1, 1, 0]).unwrap();
        let expected = Matrix::from_ints(
            4,
            4,
            &[
                0, 1, 0, 2, //
                1, 0, 2, 0, //
                0, 3, 0, 4, //
                3, 0, 4, 0,
            ],
        )
        .unwrap();
        assert_eq!(kron(&a, &x), expected);
    }

    #[test]
    fn commutation_small_cases() {
        assert_eq!(commutation_matrix(1), Matrix::identity(1));
        let expected = Matrix::from_ints(
            4,
            4,
            &[
                1, 0, 0, 0, //
                0, 0, 1, 0, //
                0, 1, 0, 0, //
                0, 0, 0, 1,
            ],
        )
        .unwrap();
        assert_eq!(commutation_matrix(2), expected);
        let k = commutation_matrix(3);
        assert_eq!(&k * &k, Matrix::identity(9));
        assert_eq!(k.transpose(), k);
    }

    #[test]
    fn vectorize_is_column_stacking() {
        let a = Matrix::from_ints(2, 2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(a.vectorize(), Matrix::from_ints(4, 1, &[1, 3, 2, 4]).unwrap());
        assert_eq!(Matrix::unvectorize(&a.vectorize(), 2, 2).unwrap(), a);
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(a.try_mul(&a), Err(Error::SizeMismatch { .. })));
        assert!(matches!(a.shift(&G::one()), Err(Error::NotSquare { rows: 2, cols: 3 })));
        assert!(Matrix::new(2, 2, vec![G::one()]).is_err());
    }

    #[test]
    fn gauge_normalization() {
        let m = Matrix::from_ints(2, 2, &[0, 4, 2, 6]).unwrap();
        let g = m.gauge_normalized();
        assert_eq!(g, Matrix::new(2, 2, vec![G::zero(), G::from(2), G::one(), G::from(3)]).unwrap());
    }
}
