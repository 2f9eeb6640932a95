use num_bigint::BigInt;

use super::Pencil;
use crate::arith::zpoly::{self, ZPoly};
use crate::arith::Rational;
use crate::linalg::int_rank;

/// Rank of `A + λB` over the field of rational functions, by fraction-free
/// (Bareiss) elimination on the integer polynomial matrix.
pub fn pencil_rank(p: &Pencil) -> usize {
    let (ra, rb) = p.integer_rows();
    let mut m: Vec<Vec<ZPoly>> =
        ra.into_iter().zip(rb).map(|(a, b)| a.into_iter().zip(b).map(|(x, y)| zpoly::linear(x, y)).collect()).collect();
    let (rows, cols) = (p.rows(), p.cols());
    let mut prev: ZPoly = vec![BigInt::from(1)];
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let piv = (rank..rows)
            .filter(|&i| !m[i][c].is_empty())
            .min_by_key(|&i| (zpoly::degree(&m[i][c]), zpoly::max_bits(&m[i][c])));
        let Some(piv) = piv else { continue };
        m.swap(rank, piv);
        let pivot = m[rank][c].clone();
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let a = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let t = zpoly::mul_sub(&pivot, &row[j], &a, &prow[j]);
                row[j] = zpoly::exact_quotient(&t, &prev).expect("Bareiss division is exact");
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Exact rank of the constant matrix `A + λ0·B`.
pub fn rank_at(p: &Pencil, lambda0: &Rational) -> usize {
    p.at(lambda0).rank()
}

/// Rank over `Q(λ)` as the largest evaluated rank. A nonzero `r`-minor has
/// degree at most `rank B`, so `rank B + 1` distinct points always contain a
/// non-root of it.
pub(crate) fn rank_by_evaluation(p: &Pencil) -> usize {
    let (ra, rb) = p.integer_rows();
    let full = p.rows().min(p.cols());
    let rb_rank = int_rank(&rb, p.cols());
    let mut best = rb_rank.min(full);
    for t in 0..=rb_rank as i64 {
        if best == full {
            break;
        }
        let t = BigInt::from(t);
        let m: Vec<Vec<BigInt>> =
            ra.iter().zip(&rb).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + &t * y).collect()).collect();
        best = best.max(int_rank(&m, p.cols()));
    }
    best
}
