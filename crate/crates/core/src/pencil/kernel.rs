use num_bigint::BigInt;
use num_traits::Zero;

use super::rank::rank_by_evaluation;
use super::{Pencil, PencilError};
use crate::linalg::int_rank;

/// Nullity of the banded system for polynomial solutions of degree <= k:
/// `A u_0 = 0`, `A u_j + B u_{j-1} = 0` for `1 <= j <= k`, `B u_k = 0`.
fn solution_space_dim(ra: &[Vec<BigInt>], rb: &[Vec<BigInt>], cols: usize, k: usize) -> usize {
    let width = (k + 1) * cols;
    let mut system = Vec::with_capacity((k + 2) * ra.len());
    for j in 0..=k + 1 {
        for (a, b) in ra.iter().zip(rb) {
            let mut row = vec![BigInt::zero(); width];
            if j <= k {
                row[j * cols..(j + 1) * cols].clone_from_slice(a);
            }
            if j >= 1 {
                row[(j - 1) * cols..j * cols].clone_from_slice(b);
            }
            if row.iter().any(|x| !x.is_zero()) {
                system.push(row);
            }
        }
    }
    width - int_rank(&system, width)
}

/// Dimensions `n_0..=n_kmax` of the spaces of polynomial kernel vectors of
/// degree at most k.
pub fn kernel_dim_sequence(p: &Pencil, kmax: usize) -> Vec<usize> {
    let (ra, rb) = p.integer_rows();
    (0..=kmax).map(|k| solution_space_dim(&ra, &rb, p.cols(), k)).collect()
}

/// Number of indices equal to k+1 is the second difference of the kernel
/// dimensions at k; iteration stops once `cols - rank` indices are found.
pub(crate) fn horizontal_with_rank(p: &Pencil, rank: usize) -> Result<Vec<usize>, PencilError> {
    let target = p.cols() - rank;
    let (ra, rb) = p.integer_rows();
    let mut out = Vec::with_capacity(target);
    let (mut n1, mut n2) = (0i64, 0i64);
    for k in 0..=p.cols() {
        if out.len() == target {
            return Ok(out);
        }
        let nk = solution_space_dim(&ra, &rb, p.cols(), k) as i64;
        let count = nk - 2 * n1 + n2;
        if count < 0 || out.len() + count as usize > target {
            return Err(PencilError::Internal(format!(
                "kernel dimension second difference {count} at degree {k} is inconsistent"
            )));
        }
        out.extend(std::iter::repeat_n(k + 1, count as usize));
        n2 = n1;
        n1 = nk;
    }
    if out.len() == target {
        Ok(out)
    } else {
        Err(PencilError::Internal(format!("found {} horizontal indices, expected {target}", out.len())))
    }
}

/// Horizontal Kronecker indices (minimal column indices plus one), sorted.
pub fn horizontal_indices(p: &Pencil) -> Result<Vec<usize>, PencilError> {
    horizontal_with_rank(p, rank_by_evaluation(p))
}

/// Vertical Kronecker indices: the horizontal indices of the transpose.
pub fn vertical_indices(p: &Pencil) -> Result<Vec<usize>, PencilError> {
    horizontal_indices(&p.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_sequence_examples() {
        let h = Pencil::from_i64(&[&[0, 1]], &[&[1, 0]]);
        assert_eq!(kernel_dim_sequence(&h, 2), vec![0, 1, 2]);
        assert_eq!(kernel_dim_sequence(&Pencil::zero(1, 1), 1), vec![1, 2]);
        let unit = Pencil::from_i64(&[&[2]], &[&[1]]);
        assert_eq!(kernel_dim_sequence(&unit, 2), vec![0, 0, 0]);
    }

    #[test]
    fn index_examples() {
        let h = Pencil::from_i64(&[&[0, 1]], &[&[1, 0]]);
        assert_eq!(horizontal_indices(&h).unwrap(), vec![2]);
        assert_eq!(horizontal_indices(&Pencil::zero(1, 1)).unwrap(), vec![1]);
        let full = Pencil::from_i64(&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 2]]);
        assert!(horizontal_indices(&full).unwrap().is_empty());

        assert_eq!(vertical_indices(&h.transpose()).unwrap(), vec![2]);
        assert_eq!(vertical_indices(&Pencil::zero(1, 1)).unwrap(), vec![1]);
        assert!(vertical_indices(&full).unwrap().is_empty());
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(horizontal_indices(&Pencil::zero(0, 3)).unwrap(), vec![1, 1, 1]);
        assert!(vertical_indices(&Pencil::zero(0, 3)).unwrap().is_empty());
        assert_eq!(vertical_indices(&Pencil::zero(2, 0)).unwrap(), vec![1, 1]);
    }

    #[test]
    fn long_horizontal_block() {
        // L_3: [[λ, 1, 0, 0], [0, λ, 1, 0], [0, 0, λ, 1]]
        let a = [&[0, 1, 0, 0][..], &[0, 0, 1, 0], &[0, 0, 0, 1]];
        let b = [&[1, 0, 0, 0][..], &[0, 1, 0, 0], &[0, 0, 1, 0]];
        let p = Pencil::from_i64(&a, &b);
        assert_eq!(horizontal_indices(&p).unwrap(), vec![4]);
        assert!(vertical_indices(&p).unwrap().is_empty());
    }
}
