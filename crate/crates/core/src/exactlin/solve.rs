//! Exact elimination: fraction-free (Bareiss) over Q, plain Gauss-Jordan
//! over F_p, and the solvers built on top of it.
//!
//! Pivots are always chosen by first nonzero index (smallest row, columns
//! scanned left to right), so every derived basis and quotient is
//! bit-for-bit reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{Field, Mat, Scalar};

/// Reduced row echelon form plus pivot bookkeeping.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// A particular solution of `a * x = b` together with a kernel basis of `a`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Mat,
    /// Columns form a basis of `ker a`.
    pub kernel: Mat,
}

/// Reduced row echelon form. Over Q the forward sweep is fraction-free
/// (one-step Bareiss on denominator-cleared rows) to bound coefficient
/// growth; the final normalization divides exactly.
pub fn rref(a: &Mat) -> Echelon {
    match a.field() {
        Field::Q => rref_q(a),
        Field::Fp(_) => rref_fp(a),
    }
}

fn rref_q(a: &Mat) -> Echelon {
    let field = a.field();
    let (rows, cols) = (a.rows(), a.cols());

    // Clear denominators row by row; row scaling changes neither the row
    // space nor pivot positions.
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..cols {
                let r = a.get(i, j).as_rational().expect("rational field");
                if !r.is_zero() {
                    lcm = lcm.lcm(r.denom());
                }
            }
            (0..cols)
                .map(|j| {
                    let r = a.get(i, j).as_rational().unwrap();
                    (r * &lcm).to_integer()
                })
                .collect()
        })
        .collect();

    // Forward fraction-free elimination.
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut lead = 0usize;
    for col in 0..cols {
        let Some(piv) = (lead..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(lead, piv);
        for r in lead + 1..rows {
            for j in 0..cols {
                if j == col {
                    continue;
                }
                let t = &m[lead][col] * &m[r][j] - &m[r][col] * &m[lead][j];
                let (q, rem) = t.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][j] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[lead][col].clone();
        pivots.push(col);
        lead += 1;
        if lead == rows {
            break;
        }
    }
    let rank = pivots.len();

    // Back substitution with exact rational division.
    let mut q: Vec<Vec<BigRational>> = m
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for (i, &pc) in pivots.iter().enumerate().rev() {
        let inv = q[i][pc].clone();
        for v in q[i].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..i {
            let factor = q[r][pc].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..cols {
                let t = &q[i][j] * &factor;
                q[r][j] = &q[r][j] - &t;
            }
        }
    }

    let rref = Mat::from_fn(rows, cols, field, |i, j| Scalar::Q(q[i][j].clone()));
    Echelon { rref, pivots, rank }
}

fn rref_fp(a: &Mat) -> Echelon {
    let field = a.field();
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|i| (0..cols).map(|j| a.get(i, j).clone()).collect())
        .collect();

    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..cols {
        let Some(piv) = (lead..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(lead, piv);
        let inv = m[lead][col].inv().expect("nonzero pivot");
        for j in 0..cols {
            m[lead][j] = &m[lead][j] * &inv;
        }
        for r in 0..rows {
            if r == lead || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..cols {
                let t = &m[lead][j] * &factor;
                m[r][j] = &m[r][j] - &t;
            }
        }
        pivots.push(col);
        lead += 1;
        if lead == rows {
            break;
        }
    }
    let rank = pivots.len();
    let rref = Mat::from_fn(rows, cols, field, |i, j| m[i][j].clone());
    Echelon { rref, pivots, rank }
}

/// Basis of `ker a`, one column per free variable, ordered by free-column
/// index. Returns a `cols(a) x (cols(a) - rank)` matrix.
pub fn kernel_basis(a: &Mat) -> Mat {
    let e = rref(a);
    kernel_from_echelon(a, &e)
}

fn kernel_from_echelon(a: &Mat, e: &Echelon) -> Mat {
    let field = a.field();
    let cols = a.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    let mut k = Mat::zeros(cols, free.len(), field);
    for (fi, &fc) in free.iter().enumerate() {
        k.set(fc, fi, Scalar::one(field));
        for (row, &pc) in e.pivots.iter().enumerate() {
            k.set(pc, fi, e.rref.get(row, fc).neg());
        }
    }
    k
}

/// Solves `a * x = b` exactly. Returns `None` when infeasible; otherwise one
/// particular solution (free variables set to zero) and a kernel basis.
pub fn solve_linear(a: &Mat, b: &Mat) -> Result<Option<Solution>> {
    if a.rows() != b.rows() {
        return Err(Error::DimMismatch {
            context: "solve_linear",
            left: a.rows().to_string(),
            right: b.rows().to_string(),
        });
    }
    let aug = a.hstack(b)?;
    let e = rref(&aug);
    if e.pivots.iter().any(|&c| c >= a.cols()) {
        return Ok(None);
    }
    let field = a.field();
    let mut particular = Mat::zeros(a.cols(), b.cols(), field);
    for (row, &pc) in e.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            particular.set(pc, j, e.rref.get(row, a.cols() + j).clone());
        }
    }
    // The echelon data of the a-block is exactly the prefix of the
    // augmented echelon, so the kernel can be read off directly.
    let a_ech = Echelon {
        rref: e.rref.columns(0, a.cols()),
        pivots: e.pivots.clone(),
        rank: e.rank,
    };
    let kernel = kernel_from_echelon(a, &a_ech);
    Ok(Some(Solution { particular, kernel }))
}

/// Cokernel data of `a`: a surjection `q` from the row space of `a`'s
/// codomain onto a quotient of dimension `rows(a) - rank(a)` with
/// `q * a = 0`, and a section `s` with `q * s = I`.
///
/// The quotient coordinates are the ambient coordinates that stay free
/// after reducing the relation matrix, scanned first-index first; the
/// section embeds those coordinates back.
pub fn cokernel_projection(a: &Mat) -> (Mat, Mat) {
    let field = a.field();
    let m = a.rows();
    let e = rref(&a.transpose());
    let free: Vec<usize> = (0..m).filter(|c| !e.pivots.contains(c)).collect();
    let qdim = free.len();

    // q(v) = (v - sum_i v[p_i] * r_i) restricted to the free coordinates.
    let mut q = Mat::zeros(qdim, m, field);
    for (fi, &fc) in free.iter().enumerate() {
        q.set(fi, fc, Scalar::one(field));
        for (row, &pc) in e.pivots.iter().enumerate() {
            q.set(fi, pc, e.rref.get(row, fc).neg());
        }
    }
    let mut s = Mat::zeros(m, qdim, field);
    for (fi, &fc) in free.iter().enumerate() {
        s.set(fc, fi, Scalar::one(field));
    }
    (q, s)
}

/// Exact inverse; `None` when singular. Errors on non-square input.
pub fn mat_inverse(a: &Mat) -> Result<Option<Mat>> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let aug = a.hstack(&Mat::identity(n, a.field()))?;
    let e = rref(&aug);
    if e.rank < n || e.pivots.iter().take(n).any(|&c| c >= n) {
        return Ok(None);
    }
    Ok(Some(e.rref.columns(n, 2 * n)))
}
