use super::point::{random_point, Point};
use super::spec::{Family, RepSpec};
use super::RepError;
use crate::arith::Rational;
use crate::linalg::QMatrix;

/// Entry bound for the random second element of the `b_sum` pair.
pub const CANONICAL_BOUND: u64 = 10;

fn unit_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> Point {
    let mut m = QMatrix::zeros(rows, cols);
    for (i, j, v) in entries {
        m.set(i, j, Rational::from_i64(v));
    }
    Point::Matrix(m)
}

/// `(X, A)` for `m` copies of the standard representation of a matrix
/// algebra: `(I_m; 0)` and `(0; I_m)` for `m < n`, `diag(1..n)` and `I` for
/// `m = n`, `(I_n 0)` and `(0 I_n)` for `m > n`.
fn sum_pair(n: usize, m: usize) -> (Point, Point) {
    use std::cmp::Ordering::*;
    match m.cmp(&n) {
        Less => (unit_entries(n, m, (0..m).map(|i| (i, i, 1))), unit_entries(n, m, (0..m).map(|i| (n - m + i, i, 1)))),
        Equal => {
            (unit_entries(n, n, (0..n).map(|i| (i, i, i as i64 + 1))), unit_entries(n, n, (0..n).map(|i| (i, i, 1))))
        }
        Greater => {
            (unit_entries(n, m, (0..n).map(|i| (i, i, 1))), unit_entries(n, m, (0..n).map(|i| (i, m - n + i, 1))))
        }
    }
}

/// Regular element of `b(n)` on `m` summands: `(0; I_m)` for `m <= n`,
/// `(I_n 0)` otherwise.
fn borel_regular(n: usize, m: usize) -> Point {
    if m <= n {
        unit_entries(n, m, (0..m).map(|i| (n - m + i, i, 1)))
    } else {
        unit_entries(n, m, (0..n).map(|i| (i, i, 1)))
    }
}

/// Skew pair of size `d`. Even `d = 2k`: `Q = ⊕ i·J`, `B = ⊕ J` with
/// `J = [[0, 1], [-1, 0]]`. Odd `d = 2k + 1`: the single Kronecker block,
/// `Q = Σ E_{i,k+i} - E_{k+i,i}`, `B = Σ E_{i,k+1+i} - E_{k+1+i,i}`.
fn skew_pair(d: usize) -> (Point, Point) {
    let k = d / 2;
    if d.is_multiple_of(2) {
        let q = (0..k).flat_map(|i| [(2 * i, 2 * i + 1, i as i64 + 1), (2 * i + 1, 2 * i, -(i as i64) - 1)]);
        let b = (0..k).flat_map(|i| [(2 * i, 2 * i + 1, 1), (2 * i + 1, 2 * i, -1)]);
        (unit_entries(d, d, q), unit_entries(d, d, b))
    } else {
        let q = (0..k).flat_map(|i| [(i, k + i, 1), (k + i, i, -1)]);
        let b = (0..k).flat_map(|i| [(i, k + 1 + i, 1), (k + 1 + i, i, -1)]);
        (unit_entries(d, d, q), unit_entries(d, d, b))
    }
}

/// Deterministic generic pair. For `b_sum` the second element is
/// `random_point(spec, seed, CANONICAL_BOUND)`.
pub fn canonical_pair_with_seed(spec: &RepSpec, seed: u64) -> Result<(Point, Point), RepError> {
    spec.validate()?;
    let n = spec.n;
    Ok(match spec.family {
        Family::GlSum | Family::SlSum | Family::SoSum | Family::SpSum => sum_pair(n, spec.m()),
        Family::BSum => (borel_regular(n, spec.m()), random_point(spec, seed, CANONICAL_BOUND)),
        Family::NStd => {
            let mut x = vec![Rational::zero(); n];
            let mut a = x.clone();
            x[n - 1] = Rational::one();
            a[n - 2] = Rational::one();
            (Point::Vector(x), Point::Vector(a))
        }
        Family::CongSym => {
            (unit_entries(n, n, (0..n).map(|i| (i, i, i as i64 + 1))), unit_entries(n, n, (0..n).map(|i| (i, i, 1))))
        }
        Family::CongSkew => skew_pair(n),
    })
}

/// The canonical pair; `b_sum` uses seed 0.
pub fn canonical_pair(spec: &RepSpec) -> Result<(Point, Point), RepError> {
    canonical_pair_with_seed(spec, 0)
}
