//! Row-primitive fraction-free elimination over the integers.
//!
//! Each update `row <- (p/g) * row - (a/g) * pivot_row` is followed by removal
//! of the row content, which keeps entries close to the size of the minors
//! they represent while leaving untouched rows alone (sparse inputs stay
//! sparse). A checked `i128` pass runs first; overflow restarts in `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Rank of an integer matrix given as rows of equal length.
pub(crate) fn int_rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    if let Some(small) = to_i128_rows(rows) {
        if let Some(r) = rank_i128(small, cols) {
            return r;
        }
        log::trace!("i128 elimination overflowed, switching to BigInt");
    }
    rank_big(rows.to_vec(), cols)
}

fn to_i128_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter().map(|r| r.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>()).collect()
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

fn pick_pivot<T>(
    m: &[Vec<T>],
    from: usize,
    c: usize,
    is_zero: impl Fn(&T) -> bool,
    size: impl Fn(&T) -> u64,
) -> Option<usize> {
    let mut best: Option<(u64, usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(from) {
        if is_zero(&row[c]) {
            continue;
        }
        let s = size(&row[c]);
        let nnz = row[c..].iter().filter(|x| !is_zero(x)).count();
        let key = (s, nnz, i);
        if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
            best = Some(key);
        }
    }
    best.map(|b| b.2)
}

fn rank_i128(mut m: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let nrows = m.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = pick_pivot(&m, rank, c, |x| *x == 0, |x| 128 - x.unsigned_abs().leading_zeros() as u64) else {
            continue;
        };
        m.swap(rank, piv);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let support: Vec<usize> = (c..cols).filter(|&j| prow[j] != 0).collect();
        let p = prow[c];
        for row in tail.iter_mut() {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let g = gcd_i128(p, a);
            let (pm, am) = (p / g, a / g);
            if pm != 1 {
                for x in row[c..].iter_mut() {
                    if *x != 0 {
                        *x = x.checked_mul(pm)?;
                    }
                }
            }
            for &j in &support {
                row[j] = row[j].checked_sub(am.checked_mul(prow[j])?)?;
            }
            debug_assert_eq!(row[c], 0);
            let mut cg = 0;
            for x in row[c + 1..].iter() {
                if *x != 0 {
                    cg = gcd_i128(cg, *x);
                    if cg == 1 {
                        break;
                    }
                }
            }
            if cg > 1 {
                for x in row[c + 1..].iter_mut() {
                    *x /= cg;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let nrows = m.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = pick_pivot(&m, rank, c, Zero::is_zero, |x: &BigInt| x.bits()) else {
            continue;
        };
        m.swap(rank, piv);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let support: Vec<usize> = (c..cols).filter(|&j| !prow[j].is_zero()).collect();
        let p = prow[c].clone();
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            let g = p.gcd(&a);
            let (pm, am) = (&p / &g, &a / &g);
            if pm != BigInt::from(1) {
                for x in row[c..].iter_mut() {
                    if !x.is_zero() {
                        *x *= &pm;
                    }
                }
            }
            for &j in &support {
                row[j] -= &am * &prow[j];
            }
            let cg = crate::arith::int_content(row[c + 1..].iter());
            if cg > BigInt::from(1) {
                for x in row[c + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x /= &cg;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(int_rank(&rows(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(int_rank(&rows(&[&[0, 0], &[0, 0]]), 2), 0);
        assert_eq!(int_rank(&rows(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]]), 3), 2);
        assert_eq!(int_rank(&rows(&[&[2, 3, 5], &[7, 11, 13], &[17, 19, 23]]), 3), 3);
    }

    #[test]
    fn big_path_agrees() {
        let big = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let m = vec![
            vec![big.clone(), BigInt::from(1), BigInt::from(3)],
            vec![BigInt::from(5), big.clone(), BigInt::from(7)],
            vec![&big + 5, &big + 1, BigInt::from(10)],
        ];
        assert_eq!(int_rank(&m, 3), 2);
        let small = rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(rank_big(small.clone(), 3), 3);
        assert_eq!(rank_i128(to_i128_rows(&small).unwrap(), 3), Some(3));
    }
}
