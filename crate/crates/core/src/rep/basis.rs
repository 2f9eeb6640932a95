//! Fixed ordered bases of the Lie algebras, as sparse integer matrices.

use super::spec::{Family, Group, RepSpec};

/// Nonzero entries `(row, col, value)` of an `n x n` matrix.
pub type SparseMat = Vec<(usize, usize, i64)>;

/// `E_ij` in row-major order.
pub fn gl_basis(n: usize) -> Vec<SparseMat> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(vec![(i, j, 1)]);
        }
    }
    out
}

/// Off-diagonal `E_ij` in row-major order, then `H_i = E_ii - E_{i+1,i+1}`.
pub fn sl_basis(n: usize) -> Vec<SparseMat> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(vec![(i, j, 1)]);
            }
        }
    }
    for i in 0..n - 1 {
        out.push(vec![(i, i, 1), (i + 1, i + 1, -1)]);
    }
    out
}

/// `E_ij - E_ji` for `i < j`.
pub fn so_basis(n: usize) -> Vec<SparseMat> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(vec![(i, j, 1), (j, i, -1)]);
        }
    }
    out
}

/// `Ω^{-1}(E_ij + E_ji)` for `i <= j`, with `Ω = [[0, I], [-I, 0]]`, so that
/// every element `X` satisfies `X^T Ω + Ω X = 0`.
pub fn sp_basis(n: usize) -> Vec<SparseMat> {
    let k = n / 2;
    // Ω^{-1} = [[0, -I], [I, 0]] maps row r of S to row omega_row(r) with sign.
    let omega_inv = |r: usize| if r < k { (r + k, 1) } else { (r - k, -1) };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let entries: Vec<(usize, usize, i64)> = if i == j { vec![(i, i, 2)] } else { vec![(i, j, 1), (j, i, 1)] };
            out.push(
                entries
                    .into_iter()
                    .map(|(r, c, v)| {
                        let (rr, s) = omega_inv(r);
                        (rr, c, s * v)
                    })
                    .collect(),
            );
        }
    }
    out
}

/// Upper triangular `E_ij`, `i <= j`, lexicographic.
pub fn b_basis(n: usize) -> Vec<SparseMat> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            out.push(vec![(i, j, 1)]);
        }
    }
    out
}

/// Strictly upper triangular `E_ij`, `i < j`, lexicographic.
pub fn n_basis(n: usize) -> Vec<SparseMat> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(vec![(i, j, 1)]);
        }
    }
    out
}

pub fn lie_basis(spec: &RepSpec) -> Vec<SparseMat> {
    let n = spec.n;
    match spec.family {
        Family::GlSum => gl_basis(n),
        Family::SlSum => sl_basis(n),
        Family::SoSum => so_basis(n),
        Family::SpSum => sp_basis(n),
        Family::BSum => b_basis(n),
        Family::NStd => n_basis(n),
        Family::CongSym | Family::CongSkew => match spec.group() {
            Group::Gl => gl_basis(n),
            Group::Sl => sl_basis(n),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::linalg::QMatrix;

    fn dense(n: usize, s: &SparseMat) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for &(i, j, v) in s {
            m.set(i, j, m.get(i, j) + &Rational::from_i64(v));
        }
        m
    }

    fn flat_rank(n: usize, basis: &[SparseMat]) -> usize {
        let mut m = QMatrix::zeros(basis.len(), n * n);
        for (k, s) in basis.iter().enumerate() {
            let d = dense(n, s);
            for i in 0..n {
                for j in 0..n {
                    m.set(k, i * n + j, d.get(i, j).clone());
                }
            }
        }
        m.rank()
    }

    #[test]
    fn bases_are_independent_with_documented_sizes() {
        for n in 1..=5 {
            assert_eq!(flat_rank(n, &gl_basis(n)), n * n);
            assert_eq!(flat_rank(n, &so_basis(n)), n * (n - 1) / 2);
            assert_eq!(flat_rank(n, &b_basis(n)), n * (n + 1) / 2);
            assert_eq!(flat_rank(n, &n_basis(n)), n * (n - 1) / 2);
            if n >= 2 {
                assert_eq!(flat_rank(n, &sl_basis(n)), n * n - 1);
            }
        }
        for n in [2, 4, 6] {
            assert_eq!(flat_rank(n, &sp_basis(n)), n * (n + 1) / 2);
        }
    }

    #[test]
    fn symplectic_condition() {
        let n = 4;
        let mut omega = QMatrix::zeros(n, n);
        for i in 0..2 {
            omega.set(i, i + 2, Rational::one());
            omega.set(i + 2, i, Rational::from_i64(-1));
        }
        for s in sp_basis(n) {
            let x = dense(n, &s);
            let lhs = x.transpose().mul(&omega).unwrap().add(&omega.mul(&x).unwrap()).unwrap();
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn traceless() {
        for s in sl_basis(4) {
            let tr: i64 = s.iter().filter(|(i, j, _)| i == j).map(|e| e.2).sum();
            assert_eq!(tr, 0);
        }
    }
}
