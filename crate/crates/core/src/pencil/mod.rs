//! Pencils `A + λB` of rational matrices and their Jordan-Kronecker data.

mod infinity;
mod invariants;
mod kernel;
mod minors;
mod rank;
mod smith;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{denominator_lcm, Rational};
use crate::linalg::{MatrixError, QMatrix};

pub use infinity::infinity_structure;
pub use invariants::{jk_invariants, replicate, CharPoly, EigenClass, JKInvariants, JordanEntry};
pub use kernel::{horizontal_indices, kernel_dim_sequence, vertical_indices};
pub use minors::{charpoly_via_minor_gcd, DEFAULT_MINOR_CAP};
pub use rank::{pencil_rank, rank_at};
pub use smith::{smith_form, smith_invariant_factors, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PencilError {
    #[error("A is {0}x{1} but B is {2}x{3}")]
    Shape(usize, usize, usize, usize),
    #[error("oracle too large: {needed} determinant evaluations exceed the cap of {cap}")]
    OracleTooLarge { needed: u128, cap: u128 },
    #[error("replication factor must be at least 1")]
    ZeroReplication,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The pencil `A + λB` with `A, B: U -> V`; `rows = dim V`, `cols = dim U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pencil {
    #[serde(rename = "A")]
    a: QMatrix,
    #[serde(rename = "B")]
    b: QMatrix,
}

impl Pencil {
    pub fn new(a: QMatrix, b: QMatrix) -> Result<Self, PencilError> {
        if a.shape() != b.shape() {
            return Err(PencilError::Shape(a.rows(), a.cols(), b.rows(), b.cols()));
        }
        Ok(Pencil { a, b })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Pencil { a: QMatrix::zeros(rows, cols), b: QMatrix::zeros(rows, cols) }
    }

    pub fn from_i64(a: &[&[i64]], b: &[&[i64]]) -> Self {
        Self::new(QMatrix::from_i64(a), QMatrix::from_i64(b)).expect("matching literal shapes")
    }

    pub fn a(&self) -> &QMatrix {
        &self.a
    }

    pub fn b(&self) -> &QMatrix {
        &self.b
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    pub fn cols(&self) -> usize {
        self.a.cols()
    }

    pub fn transpose(&self) -> Self {
        Pencil { a: self.a.transpose(), b: self.b.transpose() }
    }

    /// `B + μA`.
    pub fn reversed(&self) -> Self {
        Pencil { a: self.b.clone(), b: self.a.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Pencil { a: self.a.scale(c), b: self.b.scale(c) }
    }

    /// The constant matrix `A + λ0·B`.
    pub fn at(&self, lambda0: &Rational) -> QMatrix {
        self.a.add_scaled(lambda0, &self.b).expect("equal shapes")
    }

    /// Rows of `(A, B)` scaled jointly to integers. Row scaling by a nonzero
    /// constant is a unimodular operation, so no invariant changes.
    pub(crate) fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
        let mut ra = Vec::with_capacity(self.rows());
        let mut rb = Vec::with_capacity(self.rows());
        for i in 0..self.rows() {
            let l = denominator_lcm(self.a.row(i).iter().chain(self.b.row(i)));
            let conv = |x: &Rational| x.numer() * (&l / x.denom());
            ra.push(self.a.row(i).iter().map(conv).collect());
            rb.push(self.b.row(i).iter().map(conv).collect());
        }
        (ra, rb)
    }
}

impl<'de> Deserialize<'de> for Pencil {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(rename = "A")]
            a: QMatrix,
            #[serde(rename = "B")]
            b: QMatrix,
        }
        let raw = Raw::deserialize(d)?;
        Pencil::new(raw.a, raw.b).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_shape_check() {
        let p = Pencil::from_i64(&[&[1, 0], &[0, 2]], &[&[0, 1], &[1, 0]]);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with(r#"{"A":{"rows":2,"cols":2,"data":[["1","0"]"#));
        let back: Pencil = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let bad = r#"{"A":{"rows":1,"cols":1,"data":[["1"]]},"B":{"rows":1,"cols":2,"data":[["1","0"]]}}"#;
        let err = serde_json::from_str::<Pencil>(bad).unwrap_err().to_string();
        assert!(err.contains("1x1"), "{err}");
    }
}
