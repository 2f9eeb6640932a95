//! Dense rational matrices with exact rank.

mod elim;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{denominator_lcm, rank_mod_p, PrimeField, Rational, DEFAULT_PRIME};

pub(crate) use elim::int_rank;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix data has {got} entries in row {row}, expected {expected}")]
    RaggedRow { row: usize, got: usize, expected: usize },
    #[error("matrix declares {declared} rows but data has {got}")]
    RowCount { declared: usize, got: usize },
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    Shape(usize, usize, usize, usize),
}

/// Row-major dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        if data.len() != rows {
            return Err(MatrixError::RowCount { declared: rows, got: data.len() });
        }
        let mut flat = Vec::with_capacity(rows * cols);
        for (i, r) in data.into_iter().enumerate() {
            if r.len() != cols {
                return Err(MatrixError::RaggedRow { row: i, got: r.len(), expected: cols });
            }
            flat.extend(r);
        }
        Ok(QMatrix { rows, cols, data: flat })
    }

    /// Panics on ragged input; intended for literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows.iter().map(|row| row.iter().map(|&x| Rational::from_i64(x)).collect()).collect();
        Self::from_rows(r, c, data).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_shape(other)?;
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_shape(other)?;
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Self) -> Result<Self, MatrixError> {
        self.same_shape(other)?;
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + c * b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Shape(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.cols {
            return Err(MatrixError::Shape(self.rows, self.cols, other.rows, other.cols));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(QMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.rows != other.rows {
            return Err(MatrixError::Shape(self.rows, self.cols, other.rows, other.cols));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Ok(QMatrix { rows: self.rows, cols: self.cols + other.cols, data })
    }

    fn same_shape(&self, other: &Self) -> Result<(), MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::Shape(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(())
    }

    /// Rows scaled by their denominator lcm; the row space is unchanged.
    pub(crate) fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = denominator_lcm(row);
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        int_rank(&self.integer_rows(), self.cols)
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduces `[self | rhs]` by Gauss-Jordan elimination. Returns the
    /// determinant of `self` and the reduced right block, or `None` when
    /// `self` is singular.
    fn gauss_jordan(&self, mut rhs: QMatrix) -> Option<(Rational, QMatrix)> {
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let piv = (k..n).find(|&i| !m.get(i, k).is_zero())?;
            if piv != k {
                for j in 0..n {
                    m.data.swap(piv * n + j, k * n + j);
                }
                for j in 0..rhs.cols {
                    rhs.data.swap(piv * rhs.cols + j, k * rhs.cols + j);
                }
                det = -det;
            }
            let p = m.get(k, k).clone();
            det *= &p;
            let inv = p.recip()?;
            for j in 0..n {
                let v = m.get(k, j) * &inv;
                m.set(k, j, v);
            }
            for j in 0..rhs.cols {
                let v = rhs.get(k, j) * &inv;
                rhs.set(k, j, v);
            }
            for i in 0..n {
                if i == k || m.get(i, k).is_zero() {
                    continue;
                }
                let f = m.get(i, k).clone();
                for j in 0..n {
                    let v = m.get(i, j) - &(&f * m.get(k, j));
                    m.set(i, j, v);
                }
                for j in 0..rhs.cols {
                    let v = rhs.get(i, j) - &(&f * rhs.get(k, j));
                    rhs.set(i, j, v);
                }
            }
        }
        Some((det, rhs))
    }

    /// Determinant of a square matrix; `None` if not square.
    pub fn det(&self) -> Option<Rational> {
        if self.rows != self.cols {
            return None;
        }
        Some(self.gauss_jordan(QMatrix::zeros(self.rows, 0)).map_or_else(Rational::zero, |(d, _)| d))
    }

    /// Inverse of a square matrix; `None` if not square or singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        self.gauss_jordan(QMatrix::identity(self.rows)).map(|(_, inv)| inv)
    }

    /// Exact rank, cross-checked against the rank modulo a word-size prime.
    /// The modular rank can only be smaller; a difference marks the prime as
    /// unlucky for this matrix and is logged. The exact value is returned.
    pub fn rank_with_advisory(&self) -> usize {
        let exact = self.rank();
        let field = PrimeField::new(DEFAULT_PRIME).expect("default modulus is prime");
        match rank_mod_p(&field, &self.row_vecs()) {
            Some(r) if r != exact => log::warn!(
                "unlucky prime {} for {}x{} matrix: rank mod p {} vs exact {}",
                field.prime(),
                self.rows,
                self.cols,
                r,
                exact
            ),
            None => log::warn!("prime {} divides a denominator; advisory rank skipped", field.prime()),
            _ => {}
        }
        exact
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl Serialize for QMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson { rows: self.rows, cols: self.cols, data: self.row_vecs() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        QMatrix::from_rows(j.rows, j.cols, j.data).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_shapes() {
        let m = QMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullity(), 2);
        assert_eq!(m.transpose().shape(), (3, 2));
        assert_eq!(QMatrix::zeros(0, 4).rank(), 0);
        assert_eq!(QMatrix::zeros(3, 0).rank(), 0);
        let half = QMatrix::from_rows(
            2,
            2,
            vec![vec![Rational::frac(1, 2), Rational::frac(1, 3)], vec![Rational::from_i64(3), Rational::from_i64(2)]],
        )
        .unwrap();
        assert_eq!(half.rank(), 1);
        assert_eq!(half.rank_with_advisory(), 1);
    }

    #[test]
    fn stacking_and_products() {
        let a = QMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let b = QMatrix::from_i64(&[&[1, 1]]);
        assert_eq!(a.vstack(&b).unwrap().shape(), (3, 2));
        assert!(a.hstack(&b).is_err());
        assert_eq!(a.mul(&a).unwrap(), a);
        assert_eq!(b.mul(&a).unwrap(), b);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = QMatrix::from_i64(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        assert_eq!(m.det(), Some(Rational::from_i64(-5)));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(3));
        let s = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(), Some(Rational::zero()));
        assert!(s.inverse().is_none());
        assert!(QMatrix::zeros(1, 2).det().is_none());
    }

    #[test]
    fn json_shape_errors() {
        let bad = r#"{"rows":2,"cols":2,"data":[["1","2"],["3"]]}"#;
        assert!(serde_json::from_str::<QMatrix>(bad).is_err());
        let ok = r#"{"rows":1,"cols":2,"data":[["1/2",3]]}"#;
        let m: QMatrix = serde_json::from_str(ok).unwrap();
        assert_eq!(m.get(0, 0), &Rational::frac(1, 2));
    }
}
