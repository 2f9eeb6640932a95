//! Diagonalization of `A + λB` over `Q[λ]` and the resulting invariant
//! factors.
//!
//! Entries are kept as integer polynomials. Every operation is unimodular over
//! `Q[λ]`: swaps, scaling a row or column by a nonzero integer, and adding a
//! polynomial multiple of one row (column) to another. The pivot is the entry
//! of least degree, ties broken by coefficient bit length. Rows and columns
//! are divided by their integer content after every update.

use num_bigint::BigInt;
use num_traits::One;

use super::{Pencil, PencilError};
use crate::arith::zpoly::{self, ZPoly};
use crate::arith::{exponent_of, gcd_free_basis, UniPoly};

/// Diagonal form of a pencil and the invariant factors derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    /// Monic nonzero diagonal entries in elimination order.
    pub diagonal: Vec<UniPoly>,
    /// Monic invariant factors `d_1 | d_2 | ... | d_rank`.
    pub invariant_factors: Vec<UniPoly>,
}

fn key(p: &ZPoly) -> (usize, u64) {
    (zpoly::degree(p).unwrap_or(usize::MAX), zpoly::max_bits(p))
}

struct Work {
    m: Vec<Vec<ZPoly>>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for row in self.m.iter_mut() {
                row.swap(a, b);
            }
        }
    }

    /// Reduces `m[i][t]` modulo the pivot with a row operation. Returns true if
    /// a nonzero remainder is left behind.
    fn reduce_row(&mut self, t: usize, i: usize) -> bool {
        let (s, q, _) = zpoly::pseudo_div_rem(&self.m[i][t], &self.m[t][t]);
        let (top, bottom) = self.m.split_at_mut(i);
        let prow = &top[t];
        let row = &mut bottom[0];
        for j in t..self.cols {
            let scaled = if s.is_one() { std::mem::take(&mut row[j]) } else { zpoly::scale(&row[j], &s) };
            row[j] = if prow[j].is_empty() || q.is_empty() {
                scaled
            } else {
                zpoly::sub(&scaled, &zpoly::mul(&q, &prow[j]))
            };
        }
        strip_content(row[t..].iter_mut().collect());
        !row[t].is_empty()
    }

    fn reduce_col(&mut self, t: usize, j: usize) -> bool {
        let (s, q, _) = zpoly::pseudo_div_rem(&self.m[t][j], &self.m[t][t]);
        for i in t..self.rows {
            let row = &mut self.m[i];
            let scaled = if s.is_one() { std::mem::take(&mut row[j]) } else { zpoly::scale(&row[j], &s) };
            row[j] =
                if row[t].is_empty() || q.is_empty() { scaled } else { zpoly::sub(&scaled, &zpoly::mul(&q, &row[t])) };
        }
        strip_content(self.m[t..].iter_mut().map(|r| &mut r[j]).collect());
        !self.m[t][j].is_empty()
    }
}

/// Divides a row or column by the gcd of all its coefficients.
fn strip_content(entries: Vec<&mut ZPoly>) {
    let mut g = BigInt::from(0);
    for e in entries.iter() {
        for c in e.iter() {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        for e in entries {
            zpoly::div_exact(e, &g);
        }
    }
}

/// Diagonalizes the pencil and reads off the invariant factors.
pub fn smith_form(p: &Pencil) -> Result<SmithForm, PencilError> {
    let (ra, rb) = p.integer_rows();
    let m: Vec<Vec<ZPoly>> =
        ra.into_iter().zip(rb).map(|(a, b)| a.into_iter().zip(b).map(|(x, y)| zpoly::linear(x, y)).collect()).collect();
    let mut w = Work { m, rows: p.rows(), cols: p.cols() };
    let mut diagonal = Vec::new();
    let n = w.rows.min(w.cols);
    for t in 0..n {
        let mut best: Option<((usize, u64), usize, usize)> = None;
        for i in t..w.rows {
            for j in t..w.cols {
                if !w.m[i][j].is_empty() {
                    let k = key(&w.m[i][j]);
                    if best.is_none_or(|b| k < b.0) {
                        best = Some((k, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        w.m.swap(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut leftover = false;
            for i in t + 1..w.rows {
                if !w.m[i][t].is_empty() {
                    leftover |= w.reduce_row(t, i);
                }
            }
            for j in t + 1..w.cols {
                if !w.m[t][j].is_empty() {
                    leftover |= w.reduce_col(t, j);
                }
            }
            if !leftover {
                break;
            }
            // A remainder of smaller degree becomes the new pivot.
            let mut best: Option<((usize, u64), bool, usize)> = None;
            for i in t + 1..w.rows {
                if !w.m[i][t].is_empty() {
                    let k = key(&w.m[i][t]);
                    if best.is_none_or(|b| k < b.0) {
                        best = Some((k, true, i));
                    }
                }
            }
            for j in t + 1..w.cols {
                if !w.m[t][j].is_empty() {
                    let k = key(&w.m[t][j]);
                    if best.is_none_or(|b| k < b.0) {
                        best = Some((k, false, j));
                    }
                }
            }
            match best {
                Some((_, true, i)) => w.m.swap(t, i),
                Some((_, false, j)) => w.swap_cols(t, j),
                None => break,
            }
        }
        if zpoly::is_negative_leading(&w.m[t][t]) {
            w.m[t][t] = zpoly::scale(&w.m[t][t], &BigInt::from(-1));
        }
        diagonal.push(zpoly::to_unipoly(&w.m[t][t]).monic());
    }
    let invariant_factors = invariant_factors_from_diagonal(&diagonal)?;
    Ok(SmithForm { rank: diagonal.len(), diagonal, invariant_factors })
}

/// Any diagonal form determines the Smith form: for each element of a
/// gcd-free basis of the diagonal, its exponents across the entries are sorted
/// and redistributed in increasing order.
pub(crate) fn invariant_factors_from_diagonal(diag: &[UniPoly]) -> Result<Vec<UniPoly>, PencilError> {
    let nonconst: Vec<UniPoly> = diag.iter().filter(|d| d.degree().unwrap_or(0) > 0).cloned().collect();
    let mut out = vec![UniPoly::one(); diag.len()];
    if nonconst.is_empty() {
        return Ok(out);
    }
    let internal = |e: crate::arith::ArithError| PencilError::Internal(e.to_string());
    let basis = gcd_free_basis(&nonconst).map_err(internal)?;
    for b in &basis {
        let mut exps = diag.iter().map(|d| exponent_of(d, b)).collect::<Result<Vec<_>, _>>().map_err(internal)?;
        exps.sort_unstable();
        for (slot, e) in out.iter_mut().zip(exps) {
            if e > 0 {
                *slot = &*slot * &b.pow(e);
            }
        }
    }
    Ok(out)
}

/// Monic invariant factors of `A + λB`, one per unit of rank.
pub fn smith_invariant_factors(p: &Pencil) -> Result<Vec<UniPoly>, PencilError> {
    smith_form(p).map(|s| s.invariant_factors)
}
