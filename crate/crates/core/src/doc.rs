//! JSON document form of a matrix: domain tag, shape, and entries as scalar
//! strings in the text grammar of [`crate::scalar`]. This is the wire format
//! the command-line front end reads and writes, and the form counterexamples
//! are serialized in so they can be replayed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::{parse_scalar, ScalarDomain, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub domain: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("{0}")]
    Scalar(#[from] ScalarError),
    #[error("entry shape mismatch: declared {rows}x{cols}, found row of length {found}")]
    Shape {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("declared {rows} rows, found {found}")]
    RowCount { rows: usize, found: usize },
}

impl MatrixDocument {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixDocument {
            domain: m.domain().to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, DocError> {
        let domain: ScalarDomain = self.domain.parse()?;
        if self.entries.len() != self.rows {
            return Err(DocError::RowCount {
                rows: self.rows,
                found: self.entries.len(),
            });
        }
        let mut scalars = Vec::with_capacity(self.rows * self.cols);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(DocError::Shape {
                    rows: self.rows,
                    cols: self.cols,
                    found: row.len(),
                });
            }
            for text in row {
                scalars.push(parse_scalar(text, domain)?);
            }
        }
        Ok(Matrix::new(domain, self.rows, self.cols, scalars))
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixDocument::from_matrix(self).serialize(serializer)
    }
}
