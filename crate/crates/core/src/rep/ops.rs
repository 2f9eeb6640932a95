use super::basis::{lie_basis, SparseMat};
use super::point::Point;
use super::spec::{Family, RepSpec};
use super::RepError;
use crate::arith::Rational;
use crate::linalg::QMatrix;
use crate::pencil::Pencil;

/// `ξ M` for a sparse `ξ` and a dense `n x k` matrix `M`.
fn left_mul(xi: &SparseMat, m: &QMatrix) -> QMatrix {
    let mut out = QMatrix::zeros(m.rows(), m.cols());
    for &(i, j, v) in xi {
        let v = Rational::from_i64(v);
        for c in 0..m.cols() {
            let x = m.get(j, c);
            if !x.is_zero() {
                let sum = out.get(i, c) + &(&v * x);
                out.set(i, c, sum);
            }
        }
    }
    out
}

/// Coordinates of an element of V in the fixed basis: row-major for sums,
/// the diagonal then `i < j` for S², `i < j` for Λ².
fn coordinates(spec: &RepSpec, m: &QMatrix) -> Vec<Rational> {
    let n = m.rows();
    match spec.family {
        Family::CongSym => {
            let mut out: Vec<Rational> = (0..n).map(|i| m.get(i, i).clone()).collect();
            for i in 0..n {
                for j in i + 1..n {
                    out.push(m.get(i, j).clone());
                }
            }
            out
        }
        Family::CongSkew => {
            let mut out = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    out.push(m.get(i, j).clone());
                }
            }
            out
        }
        _ => m.row_vecs().into_iter().flatten().collect(),
    }
}

/// `ρ(ξ)x` in coordinates.
fn act(spec: &RepSpec, xi: &SparseMat, x: &Point) -> Vec<Rational> {
    match x {
        Point::Vector(v) => {
            let col =
                QMatrix::from_rows(v.len(), 1, v.iter().map(|e| vec![e.clone()]).collect()).expect("column vector");
            coordinates(spec, &left_mul(xi, &col))
        }
        Point::Matrix(m) => {
            let xm = left_mul(xi, m);
            if spec.family.is_congruence() {
                // ξQ + Qξᵀ = ξQ + (ξQᵀ)ᵀ = ξQ ± (ξQ)ᵀ for symmetric / skew Q.
                let t = xm.transpose();
                let full = if spec.family == Family::CongSkew { xm.sub(&t) } else { xm.add(&t) };
                coordinates(spec, &full.expect("square"))
            } else {
                coordinates(spec, &xm)
            }
        }
    }
}

/// Matrix of `R_x: 𝔤 -> V` in the fixed bases, `dim V x dim 𝔤`; column `j`
/// holds the coordinates of `ρ(ξ_j)x`.
pub fn operator_matrix(spec: &RepSpec, x: &Point) -> Result<QMatrix, RepError> {
    spec.validate()?;
    x.validate(spec)?;
    let basis = lie_basis(spec);
    let dim_v = spec.dim_v();
    let mut r = QMatrix::zeros(dim_v, basis.len());
    for (j, xi) in basis.iter().enumerate() {
        for (i, c) in act(spec, xi, x).into_iter().enumerate() {
            r.set(i, j, c);
        }
    }
    Ok(r)
}

/// The pencil `R_x + λ R_a`.
pub fn rep_pencil(spec: &RepSpec, x: &Point, a: &Point) -> Result<Pencil, RepError> {
    let rx = operator_matrix(spec, x)?;
    let ra = operator_matrix(spec, a)?;
    Ok(Pencil::new(rx, ra).expect("operators share a shape"))
}

/// `dim St_x`, the nullity of `R_x`.
pub fn stabilizer_dim(spec: &RepSpec, x: &Point) -> Result<usize, RepError> {
    Ok(operator_matrix(spec, x)?.nullity())
}

/// `dim V - rank R_x`.
pub fn orbit_codim(spec: &RepSpec, x: &Point) -> Result<usize, RepError> {
    Ok(spec.dim_v() - operator_matrix(spec, x)?.rank())
}

/// `dim (St_x ∩ St_a)`, the nullity of `R_x` stacked over `R_a`.
pub fn common_stabilizer_dim(spec: &RepSpec, x: &Point, a: &Point) -> Result<usize, RepError> {
    Ok(operator_matrix(spec, x)?.vstack(&operator_matrix(spec, a)?)?.nullity())
}

/// `codim (Im R_x + Im R_a)`.
pub fn image_sum_codim(spec: &RepSpec, x: &Point, a: &Point) -> Result<usize, RepError> {
    let h = operator_matrix(spec, x)?.hstack(&operator_matrix(spec, a)?)?;
    Ok(spec.dim_v() - h.rank())
}

/// A point `x + t a`, `t = 0, 1, ..., rank R_a`, of maximal operator rank. A
/// nonzero maximal minor of `R_x + t R_a` has degree at most `rank R_a` in
/// `t`, so one of these points attains the generic rank of the line.
pub fn regular_point(spec: &RepSpec, x: &Point, a: &Point) -> Result<Point, RepError> {
    let rx = operator_matrix(spec, x)?;
    let ra = operator_matrix(spec, a)?;
    let full = rx.rows().min(rx.cols());
    let mut best = (rx.rank(), 0i64);
    for t in 1..=ra.rank() as i64 {
        if best.0 == full {
            break;
        }
        let rk = rx.add_scaled(&Rational::from_i64(t), &ra)?.rank();
        if rk > best.0 {
            best = (rk, t);
        }
    }
    x.add_scaled(&Rational::from_i64(best.1), a)
}

/// Maximum number of probes used to find the regular stabilizer dimension.
const MAX_PROBES: usize = 12;

/// `dim St_{x - λ0 a} - dim St_reg`, the number of Jordan blocks of the pencil
/// `R_x - λ R_a` at `λ0`. `dim St_reg` is the minimum of the stabilizer
/// dimension over `x - (λ0 + k) a`, `k = 1, 2, 3, ...`, probed until the
/// minimum has been seen twice.
pub fn jordan_count_at(spec: &RepSpec, x: &Point, a: &Point, lambda0: &Rational) -> Result<i64, RepError> {
    let at = |t: &Rational| -> Result<usize, RepError> { stabilizer_dim(spec, &x.add_scaled(&-t, a)?) };
    let s0 = at(lambda0)?;
    let mut probes = Vec::new();
    for k in 1..=MAX_PROBES {
        probes.push(at(&(lambda0 + &Rational::from_i64(k as i64)))?);
        let min = *probes.iter().min().expect("nonempty");
        if probes.len() >= 3 && probes.iter().filter(|&&p| p == min).count() >= 2 {
            break;
        }
    }
    let reg = *probes.iter().min().expect("nonempty");
    Ok(s0 as i64 - reg as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::{jk_invariants, EigenClass};
    use crate::rep::spec::Group;

    fn int_matrix(m: &QMatrix) -> Vec<Vec<i64>> {
        m.row_vecs().iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
    }

    #[test]
    fn operator_examples() {
        let s = RepSpec::sum(Family::GlSum, 1, 1);
        assert_eq!(int_matrix(&operator_matrix(&s, &Point::matrix_i64(&[&[3]])).unwrap()), vec![vec![3]]);

        let s = RepSpec::sum(Family::GlSum, 2, 1);
        let r = operator_matrix(&s, &Point::matrix_i64(&[&[1], &[0]])).unwrap();
        assert_eq!(int_matrix(&r), vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0]]);

        let s = RepSpec::cong(Family::CongSym, Group::Gl, 2);
        let r = operator_matrix(&s, &Point::matrix_i64(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(int_matrix(&r.transpose()), vec![vec![2, 0, 0], vec![0, 0, 1], vec![0, 0, 1], vec![0, 2, 0]]);
    }

    #[test]
    fn operator_rejects_bad_points() {
        let s = RepSpec::cong(Family::CongSym, Group::Gl, 2);
        assert!(operator_matrix(&s, &Point::matrix_i64(&[&[0, 1], &[0, 0]])).is_err());
        let s = RepSpec::sum(Family::GlSum, 2, 1);
        assert!(operator_matrix(&s, &Point::matrix_i64(&[&[1, 0]])).is_err());
    }

    #[test]
    fn pencil_examples() {
        let s = RepSpec::sum(Family::GlSum, 2, 2);
        let x = Point::matrix_i64(&[&[1, 0], &[0, 2]]);
        let a = Point::matrix_i64(&[&[1, 0], &[0, 1]]);
        let inv = jk_invariants(&rep_pencil(&s, &x, &a).unwrap()).unwrap();
        // Both eigenvalues share the pattern {1, 1}, so they form one class.
        assert_eq!(inv.jordan.len(), 1);
        assert_eq!(inv.jordan[0].sizes, vec![1, 1]);
        assert_eq!(inv.jordan[0].class, EigenClass::Finite { poly: crate::arith::UniPoly::from_i64s(&[2, 3, 1]) });
        assert_eq!(jordan_count_at(&s, &x, &a, &Rational::from_i64(1)).unwrap(), 2);
        assert_eq!(jordan_count_at(&s, &x, &a, &Rational::from_i64(5)).unwrap(), 0);

        let s = RepSpec::n_std(3);
        let inv =
            jk_invariants(&rep_pencil(&s, &Point::vector_i64(&[0, 0, 1]), &Point::vector_i64(&[0, 1, 0])).unwrap())
                .unwrap();
        assert_eq!(inv.horizontal, vec![2]);
        assert_eq!(inv.vertical, vec![1]);
        assert_eq!(inv.jordan.len(), 1);
        assert_eq!(inv.jordan[0].sizes, vec![1]);
        // The canonical pair has its eigenvalue at infinity; shifting the
        // second point moves it to λ0 = 1.
        assert_eq!(inv.jordan[0].class, EigenClass::Infinity);
        let x = Point::vector_i64(&[0, 0, 1]);
        let a = Point::vector_i64(&[0, 1, 1]);
        assert_eq!(jordan_count_at(&s, &x, &a, &Rational::from_i64(1)).unwrap(), 1);
    }

    #[test]
    fn structural_examples() {
        let s = RepSpec::sum(Family::SlSum, 2, 1);
        assert_eq!(stabilizer_dim(&s, &Point::matrix_i64(&[&[1], &[0]])).unwrap(), 1);
        assert_eq!(stabilizer_dim(&s, &Point::zero(&s)).unwrap(), 3);
        assert_eq!(orbit_codim(&s, &Point::zero(&s)).unwrap(), 2);

        let s = RepSpec::cong(Family::CongSym, Group::Gl, 3);
        let q = Point::matrix_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(stabilizer_dim(&s, &q).unwrap(), 3);
        assert_eq!(common_stabilizer_dim(&s, &q, &q).unwrap(), 3);

        let s = RepSpec::sum(Family::GlSum, 3, 1);
        let x = Point::matrix_i64(&[&[1], &[0], &[0]]);
        assert_eq!(orbit_codim(&s, &x).unwrap(), 0);
        assert_eq!(image_sum_codim(&s, &x, &x).unwrap(), 0);
    }

    #[test]
    fn regular_point_on_a_line() {
        let s = RepSpec::sum(Family::GlSum, 2, 2);
        let x = Point::matrix_i64(&[&[1, 0], &[0, 0]]);
        let a = Point::matrix_i64(&[&[0, 0], &[0, 1]]);
        let r = regular_point(&s, &x, &a).unwrap();
        assert_eq!(stabilizer_dim(&s, &r).unwrap(), 0);
        assert_eq!(r, Point::matrix_i64(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn linear_in_the_point() {
        let s = RepSpec::sum(Family::SpSum, 4, 2);
        let x = crate::rep::random_point(&s, 1, 5);
        let a = crate::rep::random_point(&s, 2, 5);
        let c = Rational::frac(-3, 2);
        let lhs = operator_matrix(&s, &x.add_scaled(&c, &a).unwrap()).unwrap();
        let rhs = operator_matrix(&s, &x).unwrap().add_scaled(&c, &operator_matrix(&s, &a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
