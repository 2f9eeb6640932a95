use serde::{Deserialize, Serialize};

use super::spec::{Family, RepSpec};
use super::RepError;
use crate::arith::Rational;
use crate::linalg::QMatrix;

/// A point of the representation space: an `n x m` matrix for sums, a vector
/// for `n_std`, a symmetric or skew `n x n` matrix for congruence families.
/// JSON: a nested array of rows, or a flat array for vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Point {
    #[serde(with = "matrix_rows")]
    Matrix(QMatrix),
    Vector(Vec<Rational>),
}

mod matrix_rows {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::arith::Rational;
    use crate::linalg::QMatrix;

    pub fn serialize<S: Serializer>(m: &QMatrix, s: S) -> Result<S::Ok, S::Error> {
        m.row_vecs().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<QMatrix, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        QMatrix::from_rows(rows.len(), cols, rows).map_err(serde::de::Error::custom)
    }
}

impl Point {
    pub fn matrix_i64(rows: &[&[i64]]) -> Self {
        Point::Matrix(QMatrix::from_i64(rows))
    }

    pub fn vector_i64(v: &[i64]) -> Self {
        Point::Vector(v.iter().map(|&x| Rational::from_i64(x)).collect())
    }

    /// The zero point of the representation space of `spec`.
    pub fn zero(spec: &RepSpec) -> Self {
        match spec.family {
            Family::NStd => Point::Vector(vec![Rational::zero(); spec.n]),
            Family::CongSym | Family::CongSkew => Point::Matrix(QMatrix::zeros(spec.n, spec.n)),
            _ => Point::Matrix(QMatrix::zeros(spec.n, spec.m())),
        }
    }

    pub fn as_matrix(&self) -> Option<&QMatrix> {
        match self {
            Point::Matrix(m) => Some(m),
            Point::Vector(_) => None,
        }
    }

    pub fn as_vector(&self) -> Option<&[Rational]> {
        match self {
            Point::Vector(v) => Some(v),
            Point::Matrix(_) => None,
        }
    }

    /// Checks shape and symmetry against `spec`.
    pub fn validate(&self, spec: &RepSpec) -> Result<(), RepError> {
        let n = spec.n;
        match (spec.family, self) {
            (Family::NStd, Point::Vector(v)) => {
                if v.len() != n {
                    return Err(RepError::Shape(format!("{spec} expects a vector of length {n}, got {}", v.len())));
                }
            }
            (Family::NStd, Point::Matrix(_)) => {
                return Err(RepError::Shape(format!("{spec} expects a vector, got a matrix")));
            }
            (_, Point::Vector(_)) => {
                return Err(RepError::Shape(format!("{spec} expects a matrix, got a vector")));
            }
            (fam, Point::Matrix(q)) if fam.is_congruence() => {
                if q.shape() != (n, n) {
                    return Err(RepError::Shape(format!("{spec} expects {n}x{n}, got {}x{}", q.rows(), q.cols())));
                }
                let skew = fam == Family::CongSkew;
                for i in 0..n {
                    for j in i..n {
                        let ok = if skew { q.get(i, j) == &-q.get(j, i) } else { q.get(i, j) == q.get(j, i) };
                        if !ok {
                            let kind = if skew { "skew-symmetric" } else { "symmetric" };
                            return Err(RepError::Symmetry(format!("{spec} expects a {kind} matrix; entry ({i},{j})")));
                        }
                    }
                }
            }
            (_, Point::Matrix(x)) => {
                let m = spec.m();
                if x.shape() != (n, m) {
                    return Err(RepError::Shape(format!("{spec} expects {n}x{m}, got {}x{}", x.rows(), x.cols())));
                }
            }
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Point) -> Result<Point, RepError> {
        match (self, other) {
            (Point::Matrix(a), Point::Matrix(b)) => Ok(Point::Matrix(a.add_scaled(c, b)?)),
            (Point::Vector(a), Point::Vector(b)) if a.len() == b.len() => {
                Ok(Point::Vector(a.iter().zip(b).map(|(x, y)| x + &(c * y)).collect()))
            }
            _ => Err(RepError::Shape("points of different shapes".into())),
        }
    }

    pub fn add(&self, other: &Point) -> Result<Point, RepError> {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn scale(&self, c: &Rational) -> Point {
        match self {
            Point::Matrix(a) => Point::Matrix(a.scale(c)),
            Point::Vector(v) => Point::Vector(v.iter().map(|x| x * c).collect()),
        }
    }
}

/// The splitmix64 generator; the state starts at the seed.
#[derive(Clone, Debug)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[-bound, bound]`, by rejection of the biased tail.
    pub fn uniform(&mut self, bound: u64) -> i64 {
        let range = 2 * bound + 1;
        let limit = (u64::MAX / range) * range;
        loop {
            let x = self.next_u64();
            if x < limit {
                return (x % range) as i64 - bound as i64;
            }
        }
    }
}

/// Deterministic random point with integer entries in `[-bound, bound]`.
/// Sums fill `X` row-major; congruence families fill the upper triangle
/// row-major (strictly upper for skew) and mirror it.
pub fn random_point(spec: &RepSpec, seed: u64, bound: u64) -> Point {
    let mut rng = SplitMix64::new(seed);
    let n = spec.n;
    match spec.family {
        Family::NStd => Point::Vector((0..n).map(|_| Rational::from_i64(rng.uniform(bound))).collect()),
        Family::CongSym | Family::CongSkew => {
            let skew = spec.family == Family::CongSkew;
            let mut q = QMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    if skew && i == j {
                        continue;
                    }
                    let v = Rational::from_i64(rng.uniform(bound));
                    q.set(j, i, if skew { -&v } else { v.clone() });
                    q.set(i, j, v);
                }
            }
            Point::Matrix(q)
        }
        _ => {
            let m = spec.m();
            let mut x = QMatrix::zeros(n, m);
            for i in 0..n {
                for j in 0..m {
                    x.set(i, j, Rational::from_i64(rng.uniform(bound)));
                }
            }
            Point::Matrix(x)
        }
    }
}

/// The pair `(random_point(2 seed), random_point(2 seed + 1))`.
pub fn random_pair(spec: &RepSpec, seed: u64, bound: u64) -> (Point, Point) {
    (random_point(spec, 2 * seed, bound), random_point(spec, 2 * seed + 1, bound))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::rep::spec::Group;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 of the reference splitmix64.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn uniform_stays_in_range_and_hits_ends() {
        let mut r = SplitMix64::new(7);
        let draws: Vec<i64> = (0..2000).map(|_| r.uniform(3)).collect();
        assert!(draws.iter().all(|x| (-3..=3).contains(x)));
        assert!(draws.contains(&-3) && draws.contains(&3));
    }

    #[test]
    fn random_points_are_reproducible_and_well_formed() {
        let skew = RepSpec::cong(Family::CongSkew, Group::Gl, 5);
        let p = random_point(&skew, 11, 10);
        assert_eq!(p, random_point(&skew, 11, 10));
        p.validate(&skew).unwrap();
        let q = p.as_matrix().unwrap();
        assert!((0..5).all(|i| q.get(i, i).is_zero()));
        let sym = RepSpec::cong(Family::CongSym, Group::Sl, 3);
        random_point(&sym, 3, 10).validate(&sym).unwrap();
        let sum = RepSpec::sum(Family::SoSum, 3, 2);
        random_point(&sum, 3, 10).validate(&sum).unwrap();
        let v = RepSpec::n_std(4);
        random_point(&v, 3, 10).validate(&v).unwrap();
    }

    #[test]
    fn seeds_give_distinct_points() {
        let spec = RepSpec::sum(Family::GlSum, 3, 3);
        let seen: HashSet<String> =
            (0..10_000).map(|s| serde_json::to_string(&random_point(&spec, s, 10)).unwrap()).collect();
        assert_eq!(seen.len(), 10_000);
        // Pairs on the smallest space with six coordinates.
        let small = RepSpec::sum(Family::GlSum, 2, 3);
        assert!((0..10_000).all(|s| {
            let (x, a) = random_pair(&small, s, 10);
            x != a
        }));
    }

    #[test]
    fn json_forms_and_validation() {
        let m: Point = serde_json::from_str(r#"[["1","0"],["0","1/2"]]"#).unwrap();
        assert_eq!(m.as_matrix().unwrap().get(1, 1), &Rational::frac(1, 2));
        let v: Point = serde_json::from_str(r#"["1","2","3"]"#).unwrap();
        assert_eq!(v, Point::vector_i64(&[1, 2, 3]));
        assert_eq!(serde_json::to_string(&Point::vector_i64(&[4])).unwrap(), r#"["4"]"#);
        assert!(serde_json::from_str::<Point>(r#"[["1"],["2","3"]]"#).is_err());

        let sym = RepSpec::cong(Family::CongSym, Group::Gl, 2);
        let bad = Point::matrix_i64(&[&[1, 2], &[3, 1]]);
        assert!(matches!(bad.validate(&sym), Err(RepError::Symmetry(_))));
        let skew = RepSpec::cong(Family::CongSkew, Group::Gl, 2);
        assert!(Point::matrix_i64(&[&[1, 2], &[-2, 0]]).validate(&skew).is_err());
        assert!(Point::vector_i64(&[1, 2]).validate(&sym).is_err());
        assert!(Point::matrix_i64(&[&[1], &[2]]).validate(&RepSpec::sum(Family::GlSum, 2, 2)).is_err());
    }
}
