//! Dense matrices over an exact field, row-major.

use std::fmt;

use crate::error::{Error, Result};

use super::{Field, Scalar};

/// A dense `rows x cols` matrix whose entries all live in one field.
///
/// The field is carried explicitly so that degenerate shapes (`0 x n`)
/// still know what they are matrices over.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, field: Field, entries: Vec<Scalar>) -> Result<Mat> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(field, e.field()));
            }
        }
        Ok(Mat {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize, field: Field) -> Mat {
        Mat {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Mat {
        let mut m = Mat::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, field: Field, f: impl Fn(usize, usize) -> Scalar) -> Mat {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            field,
            entries,
        }
    }

    /// Integer literal matrix, handy in tests and fixtures.
    pub fn from_i64(field: Field, data: &[&[i64]]) -> Mat {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        Mat::from_fn(rows, cols, field, |i, j| Scalar::from_i64(data[i][j], field))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows, self.field)
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimMismatch {
                context: "matrix product",
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = Mat::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * other.get(k, j);
                    let v = out.get(i, j) + &t;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch {
                context: "matrix sum",
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Mat::new(self.rows, self.cols, self.field, entries)
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.scale(&Scalar::one(self.field).neg()))
    }

    pub fn scale(&self, by: &Scalar) -> Mat {
        let entries = self.entries.iter().map(|e| e * by).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product: `(a ⊗ b)[(i*rb+k), (j*cb+l)] = a[i,j] * b[k,l]`.
    ///
    /// Realizes the tensor product of linear maps under the convention that
    /// the left factor owns the most significant part of a flattened index.
    pub fn kron(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Mat::zeros(self.rows * rb, self.cols * cb, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.set(i * rb + k, j * cb + l, a * other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `[self | other]` side by side.
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimMismatch {
                context: "hstack",
                left: self.rows.to_string(),
                right: other.rows.to_string(),
            });
        }
        Ok(Mat::from_fn(
            self.rows,
            self.cols + other.cols,
            self.field,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimMismatch {
                context: "vstack",
                left: self.cols.to_string(),
                right: other.cols.to_string(),
            });
        }
        Ok(Mat::from_fn(
            self.rows + other.rows,
            self.cols,
            self.field,
            |i, j| {
                if i < self.rows {
                    self.get(i, j).clone()
                } else {
                    other.get(i - self.rows, j).clone()
                }
            },
        ))
    }

    pub fn column(&self, j: usize) -> Mat {
        Mat::from_fn(self.rows, 1, self.field, |i, _| self.get(i, j).clone())
    }

    /// Columns `lo..hi` as a new matrix.
    pub fn columns(&self, lo: usize, hi: usize) -> Mat {
        Mat::from_fn(self.rows, hi - lo, self.field, |i, j| {
            self.get(i, lo + j).clone()
        })
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        super::solve::rref(self).rank
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
