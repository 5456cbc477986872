//! JSON interchange documents for matrices and superoperators.
//!
//! Scalars travel as strings in the [`parse_scalar`] grammar, never as
//! floats.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::{parse_scalar, ScalarParseError};
use crate::superop::{SuperOp, MAX_N};

/// The only accepted value of `vec_convention`.
pub const COLUMN_CONVENTION: &str = "column";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    Empty { rows: usize, cols: usize },
    #[error("declared {declared} {what} but found {found}")]
    Shape {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("entry ({row}, {col}) {text:?}: {source}")]
    Scalar {
        row: usize,
        col: usize,
        text: String,
        source: ScalarParseError,
    },
    #[error("unsupported vec_convention {0:?}, expected \"column\"")]
    Convention(String),
    #[error("superoperator size n = {0} outside 1..={MAX_N}")]
    Size(usize),
    #[error("superoperator L must be {expected}x{expected}, got {rows}x{cols}")]
    SuperOpShape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n_rows: usize,
    pub n_cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&Matrix> for MatrixDocument {
    fn from(m: &Matrix) -> Self {
        MatrixDocument {
            n_rows: m.rows(),
            n_cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl TryFrom<&MatrixDocument> for Matrix {
    type Error = DocumentError;

    fn try_from(doc: &MatrixDocument) -> Result<Self, Self::Error> {
        if doc.n_rows == 0 || doc.n_cols == 0 {
            return Err(DocumentError::Empty {
                rows: doc.n_rows,
                cols: doc.n_cols,
            });
        }
        if doc.entries.len() != doc.n_rows {
            return Err(DocumentError::Shape {
                what: "rows",
                declared: doc.n_rows,
                found: doc.entries.len(),
            });
        }
        let mut values = Vec::with_capacity(doc.n_rows * doc.n_cols);
        for (row, cells) in doc.entries.iter().enumerate() {
            if cells.len() != doc.n_cols {
                return Err(DocumentError::Shape {
                    what: "columns",
                    declared: doc.n_cols,
                    found: cells.len(),
                });
            }
            for (col, text) in cells.iter().enumerate() {
                let v = parse_scalar(text).map_err(|source| DocumentError::Scalar {
                    row,
                    col,
                    text: text.clone(),
                    source,
                })?;
                values.push(v);
            }
        }
        Ok(Matrix::new(doc.n_rows, doc.n_cols, values).expect("shape checked"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperOpDocument {
    pub n: usize,
    pub vec_convention: String,
    #[serde(rename = "L")]
    pub l: MatrixDocument,
}

impl From<&SuperOp> for SuperOpDocument {
    fn from(phi: &SuperOp) -> Self {
        SuperOpDocument {
            n: phi.n(),
            vec_convention: COLUMN_CONVENTION.to_owned(),
            l: phi.matrix().into(),
        }
    }
}

impl TryFrom<&SuperOpDocument> for SuperOp {
    type Error = DocumentError;

    fn try_from(doc: &SuperOpDocument) -> Result<Self, Self::Error> {
        if doc.vec_convention != COLUMN_CONVENTION {
            return Err(DocumentError::Convention(doc.vec_convention.clone()));
        }
        if doc.n == 0 || doc.n > MAX_N {
            return Err(DocumentError::Size(doc.n));
        }
        let side = doc.n * doc.n;
        if doc.l.n_rows != side || doc.l.n_cols != side {
            return Err(DocumentError::SuperOpShape {
                expected: side,
                rows: doc.l.n_rows,
                cols: doc.l.n_cols,
            });
        }
        let l = Matrix::try_from(&doc.l)?;
        Ok(SuperOp::new(doc.n, l).expect("shape checked"))
    }
}
