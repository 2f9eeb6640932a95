//! Brute-force characteristic polynomial: the gcd of all maximal minors.
//! Independent of the elimination code paths and used as a test oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::invariants::CharPoly;
use super::rank::rank_by_evaluation;
use super::{Pencil, PencilError};
use crate::arith::{poly_gcd, Rational, UniPoly};

/// Default bound on the number of determinant evaluations: `r x r` minors
/// times the `r + 1` interpolation points.
pub const DEFAULT_MINOR_CAP: u128 = 1_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        let Some(next) = c.checked_mul((n - i) as u128) else {
            return u128::MAX;
        };
        c = next / (i as u128 + 1);
    }
    c
}

fn det_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let piv = (k..n).find(|&i| m[i][k] != 0);
        let Some(piv) = piv else { return Some(0) };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].checked_mul(m[i][j])?.checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = t / prev;
            }
        }
        prev = m[k][k];
    }
    Some(if n == 0 { sign } else { sign * m[n - 1][n - 1] })
}

fn det_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = if n == 0 { BigInt::from(1) } else { m[n - 1][n - 1].clone() };
    if negate {
        -d
    } else {
        d
    }
}

/// Newton interpolation through `(i, values[i])`, `i = 0..len`.
fn interpolate(values: &[BigInt]) -> UniPoly {
    let n = values.len();
    let mut coef: Vec<Rational> = values.iter().cloned().map(Rational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let d = Rational::from_i64(level as i64);
            coef[i] = &(&coef[i] - &coef[i - 1]) / &d;
        }
    }
    // Horner over the Newton basis (x - 0)(x - 1)...
    let mut p = UniPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let basis = UniPoly::linear_root(&Rational::from_i64(i as i64));
        p = &(&p * &basis) + &UniPoly::constant(coef[i].clone());
    }
    p
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// gcd of the `r x r` minors of `A + λB` (monic) and the multiplicity of the
/// eigenvalue at infinity, `r - max deg`. Rows and columns that vanish in both
/// `A` and `B` are dropped first, as every minor through them is zero. Fails
/// when more than `cap` determinant evaluations would be needed.
pub fn charpoly_via_minor_gcd(p: &Pencil, cap: u128) -> Result<CharPoly, PencilError> {
    let r = rank_by_evaluation(p);
    if r == 0 {
        return Ok(CharPoly { finite_part: UniPoly::one(), inf_exponent: 0 });
    }
    let (ra, rb) = p.integer_rows();
    let keep_rows: Vec<usize> = (0..p.rows()).filter(|&i| ra[i].iter().chain(&rb[i]).any(|x| !x.is_zero())).collect();
    let keep_cols: Vec<usize> =
        (0..p.cols()).filter(|&j| keep_rows.iter().any(|&i| !ra[i][j].is_zero() || !rb[i][j].is_zero())).collect();
    let (rows, cols) = (keep_rows.len(), keep_cols.len());
    let needed = binomial(rows, r).saturating_mul(binomial(cols, r)).saturating_mul(r as u128 + 1);
    if needed > cap {
        return Err(PencilError::OracleTooLarge { needed, cap });
    }
    let pick = |m: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        keep_rows.iter().map(|&i| keep_cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
    };
    let (ra, rb) = (pick(&ra), pick(&rb));
    // Evaluated matrices A + tB for t = 0..=r.
    let evals: Vec<Vec<Vec<BigInt>>> = (0..=r)
        .map(|t| {
            let t = BigInt::from(t);
            ra.iter().zip(&rb).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + &t * y).collect()).collect()
        })
        .collect();
    let small: Option<Vec<Vec<Vec<i128>>>> =
        evals.iter().map(|m| m.iter().map(|row| row.iter().map(|x| x.to_i128()).collect()).collect()).collect();

    let mut g = UniPoly::zero();
    let mut max_deg: Option<usize> = None;
    let mut rows_sel: Vec<usize> = (0..r).collect();
    'rows: loop {
        let mut cols_sel: Vec<usize> = (0..r).collect();
        loop {
            let values: Vec<BigInt> = (0..=r)
                .map(|t| {
                    let fast = small.as_ref().and_then(|s| {
                        let sub = rows_sel.iter().map(|&i| cols_sel.iter().map(|&j| s[t][i][j]).collect()).collect();
                        det_i128(sub)
                    });
                    match fast {
                        Some(d) => BigInt::from(d),
                        None => det_big(
                            rows_sel
                                .iter()
                                .map(|&i| cols_sel.iter().map(|&j| evals[t][i][j].clone()).collect())
                                .collect(),
                        ),
                    }
                })
                .collect();
            let f = interpolate(&values);
            if let Some(d) = f.degree() {
                max_deg = Some(max_deg.map_or(d, |m| m.max(d)));
                if g.is_zero() || !g.divides(&f) {
                    g = poly_gcd(&g, &f);
                }
                if g.is_one() && max_deg == Some(r) {
                    break 'rows;
                }
            }
            if !next_combination(&mut cols_sel, cols) {
                break;
            }
        }
        if !next_combination(&mut rows_sel, rows) {
            break;
        }
    }
    let max_deg = max_deg.ok_or_else(|| PencilError::Internal("all maximal minors vanish".into()))?;
    Ok(CharPoly { finite_part: g.monic(), inf_exponent: r - max_deg })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let m = vec![vec![2i128, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        assert_eq!(det_i128(m.clone()), Some(18));
        let big = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(det_big(big), BigInt::from(18));
        assert_eq!(det_i128(vec![vec![0, 1], vec![1, 0]]), Some(-1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = UniPoly::from_i64s(&[3, -2, 0, 1]);
        let vals: Vec<BigInt> = (0..5).map(|i| f.eval(&Rational::from_i64(i)).numer().clone()).collect();
        assert_eq!(interpolate(&vals), f);
    }

    #[test]
    fn charpoly_examples() {
        let p = Pencil::from_i64(&[&[2, 1], &[0, 2]], &[&[1, 0], &[0, 1]]);
        let c = charpoly_via_minor_gcd(&p, DEFAULT_MINOR_CAP).unwrap();
        assert_eq!(c.finite_part, UniPoly::from_i64s(&[4, 4, 1]));
        assert_eq!(c.inf_exponent, 0);

        let p = Pencil::from_i64(&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]);
        let c = charpoly_via_minor_gcd(&p, DEFAULT_MINOR_CAP).unwrap();
        assert!(c.finite_part.is_one());
        assert_eq!(c.inf_exponent, 2);

        let p = Pencil::from_i64(&[&[0, 1]], &[&[1, 0]]);
        let c = charpoly_via_minor_gcd(&p, DEFAULT_MINOR_CAP).unwrap();
        assert!(c.finite_part.is_one());
        assert_eq!(c.inf_exponent, 0);
    }

    #[test]
    fn cap_is_enforced() {
        let p = Pencil::from_i64(&[&[1, 0, 0], &[0, 1, 0]], &[&[0, 1, 0], &[0, 0, 1]]);
        assert!(matches!(charpoly_via_minor_gcd(&p, 2), Err(PencilError::OracleTooLarge { needed: 9, cap: 2 })));
    }
}
