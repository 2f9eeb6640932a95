//! Jordan structure at λ = ∞ from local ranks of the reversed pencil.
//!
//! For `M(μ) = B + μA` with local Smith exponents `e_1..e_r` at μ = 0, the
//! block lower-triangular Toeplitz matrix `T_k` with `B` on the diagonal and
//! `A` below it has rank `Σ max(0, k - e_i)`. The first differences of these
//! ranks count the exponents, so no polynomial arithmetic is needed.

use num_bigint::BigInt;
use num_traits::Zero;

use super::rank::rank_by_evaluation;
use super::{Pencil, PencilError};
use crate::linalg::int_rank;

/// Local Smith exponents (only the positive ones, sorted) of `M0 + t·M1` at
/// `t = 0`, where `r` is the rank of the pencil over the rational functions.
pub(crate) fn local_exponents(
    m0: &[Vec<BigInt>],
    m1: &[Vec<BigInt>],
    cols: usize,
    r: usize,
) -> Result<Vec<usize>, PencilError> {
    let mut deltas = vec![0usize];
    let mut prev_rank = 0usize;
    for k in 1..=r + 1 {
        let width = k * cols;
        let mut t = Vec::with_capacity(k * m0.len());
        for bi in 0..k {
            for (row0, row1) in m0.iter().zip(m1) {
                let mut row = vec![BigInt::zero(); width];
                row[bi * cols..(bi + 1) * cols].clone_from_slice(row0);
                if bi >= 1 {
                    row[(bi - 1) * cols..bi * cols].clone_from_slice(row1);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    t.push(row);
                }
            }
        }
        let rk = int_rank(&t, width);
        let delta = rk - prev_rank;
        prev_rank = rk;
        deltas.push(delta);
        if delta == r {
            let mut sizes = Vec::new();
            for e in 1..k {
                let count = deltas[e + 1]
                    .checked_sub(deltas[e])
                    .ok_or_else(|| PencilError::Internal("local rank increments decreased".into()))?;
                sizes.extend(std::iter::repeat_n(e, count));
            }
            return Ok(sizes);
        }
    }
    Err(PencilError::Internal(format!("local ranks did not stabilize at rank {r}")))
}

pub(crate) fn infinity_with_rank(p: &Pencil, r: usize) -> Result<Vec<usize>, PencilError> {
    let (ra, rb) = p.integer_rows();
    if r == 0 || int_rank(&rb, p.cols()) == r {
        return Ok(Vec::new());
    }
    local_exponents(&rb, &ra, p.cols(), r)
}

/// Sizes of the Jordan blocks at infinity, sorted.
pub fn infinity_structure(p: &Pencil) -> Result<Vec<usize>, PencilError> {
    infinity_with_rank(p, rank_by_evaluation(p))
}
