//! Exact scalar arithmetic and dense linear algebra over Q or F_p: the
//! substrate every morphism-equality test, solver and quotient construction
//! sits on. No floating point anywhere.

mod mat;
mod scalar;
pub mod solve;

pub use mat::Mat;
pub use scalar::{Field, Scalar};
pub use solve::{cokernel_projection, kernel_basis, mat_inverse, rref, solve_linear, Echelon, Solution};

use crate::error::Result;

/// Kronecker product of two matrices over the same field.
pub fn kron(a: &Mat, b: &Mat) -> Result<Mat> {
    a.kron(b)
}
