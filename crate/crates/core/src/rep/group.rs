use serde::{Deserialize, Serialize};

use super::point::{Point, SplitMix64};
use super::spec::{Family, Group, RepSpec};
use super::RepError;
use crate::arith::Rational;
use crate::linalg::QMatrix;

/// Group element data acting on a representation space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupElement {
    /// `X ↦ C X D` on sums, `C` in the group of the family, `D ∈ GL(m)`.
    LeftRight { c: QMatrix, d: QMatrix },
    /// `Q ↦ P Q Pᵀ`.
    Congruence { p: QMatrix },
    /// `x ↦ C x` with `C` upper triangular, preserving the standard flag.
    Flag { c: QMatrix },
}

fn omega(n: usize) -> QMatrix {
    let k = n / 2;
    let mut o = QMatrix::zeros(n, n);
    for i in 0..k {
        o.set(i, k + i, Rational::one());
        o.set(k + i, i, Rational::from_i64(-1));
    }
    o
}

fn is_upper_triangular(c: &QMatrix) -> bool {
    (0..c.rows()).all(|i| (0..i).all(|j| c.get(i, j).is_zero()))
}

fn check_square_invertible(name: &str, c: &QMatrix, n: usize) -> Result<(), RepError> {
    if c.shape() != (n, n) {
        return Err(RepError::Group(format!("{name} must be {n}x{n}, got {}x{}", c.rows(), c.cols())));
    }
    if c.det().is_none_or(|d| d.is_zero()) {
        return Err(RepError::Group(format!("{name} is not invertible")));
    }
    Ok(())
}

/// Checks that `g` is an admissible element for `spec`.
pub fn check_admissible(spec: &RepSpec, g: &GroupElement) -> Result<(), RepError> {
    let n = spec.n;
    let fam = spec.family;
    match g {
        GroupElement::LeftRight { c, d } if fam.is_sum() => {
            check_square_invertible("C", c, n)?;
            check_square_invertible("D", d, spec.m())?;
            match fam {
                Family::SoSum if c.transpose().mul(c)? != QMatrix::identity(n) => {
                    Err(RepError::Group("C is not orthogonal".into()))
                }
                Family::SpSum if c.transpose().mul(&omega(n))?.mul(c)? != omega(n) => {
                    Err(RepError::Group("C is not symplectic".into()))
                }
                Family::BSum if !is_upper_triangular(c) => Err(RepError::Group("C is not upper triangular".into())),
                _ => Ok(()),
            }
        }
        GroupElement::Congruence { p } if fam.is_congruence() => {
            check_square_invertible("P", p, n)?;
            if spec.group() == Group::Sl && p.det() != Some(Rational::one()) {
                return Err(RepError::Group("det P must be 1".into()));
            }
            Ok(())
        }
        GroupElement::Flag { c } if fam == Family::NStd => {
            check_square_invertible("C", c, n)?;
            if !is_upper_triangular(c) {
                return Err(RepError::Group("C is not upper triangular".into()));
            }
            Ok(())
        }
        _ => Err(RepError::Group(format!("element kind does not act on {spec}"))),
    }
}

/// `g · x` for an admissible `g`.
pub fn group_transform(spec: &RepSpec, g: &GroupElement, x: &Point) -> Result<Point, RepError> {
    x.validate(spec)?;
    check_admissible(spec, g)?;
    Ok(match (g, x) {
        (GroupElement::LeftRight { c, d }, Point::Matrix(m)) => Point::Matrix(c.mul(m)?.mul(d)?),
        (GroupElement::Congruence { p }, Point::Matrix(q)) => Point::Matrix(p.mul(q)?.mul(&p.transpose())?),
        (GroupElement::Flag { c }, Point::Vector(v)) => {
            Point::Vector((0..c.rows()).map(|i| (0..c.cols()).map(|j| c.get(i, j) * &v[j]).sum()).collect())
        }
        _ => unreachable!("point shape checked against the family"),
    })
}

fn unit_triangular(rng: &mut SplitMix64, n: usize, upper: bool) -> QMatrix {
    let mut m = QMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if (upper && j > i) || (!upper && j < i) {
                m.set(i, j, Rational::from_i64(rng.uniform(2)));
            }
        }
    }
    m
}

fn nonzero_diagonal(rng: &mut SplitMix64, n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        let v = [1, -1, 2, -2][(rng.next_u64() % 4) as usize];
        m.set(i, i, Rational::from_i64(v));
    }
    m
}

fn lower_diag_upper(rng: &mut SplitMix64, n: usize) -> QMatrix {
    let l = unit_triangular(rng, n, false);
    let d = nonzero_diagonal(rng, n);
    let u = unit_triangular(rng, n, true);
    l.mul(&d).and_then(|x| x.mul(&u)).expect("square factors")
}

/// Cayley transform `(I - K)(I + K)^{-1}` of a random skew `K`, with random
/// column signs.
fn random_orthogonal(rng: &mut SplitMix64, n: usize) -> QMatrix {
    let mut k = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = Rational::from_i64(rng.uniform(2));
            k.set(j, i, -&v);
            k.set(i, j, v);
        }
    }
    let id = QMatrix::identity(n);
    let inv = id.add(&k).ok().and_then(|m| m.inverse()).expect("I + K is invertible for skew K");
    let mut signs = QMatrix::zeros(n, n);
    for i in 0..n {
        signs.set(i, i, Rational::from_i64(if rng.next_u64().is_multiple_of(2) { 1 } else { -1 }));
    }
    id.sub(&k).and_then(|m| m.mul(&inv)).and_then(|m| m.mul(&signs)).expect("square factors")
}

/// `[[I, S1], [0, I]] · [[I, 0], [S2, I]] · [[M, 0], [0, M^{-T}]]` with random
/// symmetric `S1, S2` and unimodular `M`.
fn random_symplectic(rng: &mut SplitMix64, n: usize) -> QMatrix {
    let k = n / 2;
    let sym = |rng: &mut SplitMix64| {
        let mut s = QMatrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let v = Rational::from_i64(rng.uniform(2));
                s.set(j, i, v.clone());
                s.set(i, j, v);
            }
        }
        s
    };
    let s1 = sym(rng);
    let s2 = sym(rng);
    let m = unit_triangular(rng, k, false).mul(&unit_triangular(rng, k, true)).expect("square");
    let m_inv_t = m.inverse().expect("unimodular").transpose();
    let block = |tl: &QMatrix, tr: &QMatrix, bl: &QMatrix, br: &QMatrix| {
        tl.hstack(tr).and_then(|top| bl.hstack(br).and_then(|bot| top.vstack(&bot))).expect("block shapes")
    };
    let id = QMatrix::identity(k);
    let z = QMatrix::zeros(k, k);
    let u = block(&id, &s1, &z, &id);
    let l = block(&id, &z, &s2, &id);
    let d = block(&m, &z, &z, &m_inv_t);
    u.mul(&l).and_then(|x| x.mul(&d)).expect("square factors")
}

/// A deterministic random admissible element for `spec`.
pub fn random_group_element(spec: &RepSpec, seed: u64) -> GroupElement {
    let mut rng = SplitMix64::new(seed);
    let n = spec.n;
    match spec.family {
        Family::NStd => {
            let d = nonzero_diagonal(&mut rng, n);
            GroupElement::Flag { c: d.mul(&unit_triangular(&mut rng, n, true)).expect("square") }
        }
        Family::CongSym | Family::CongSkew => {
            let p = match spec.group() {
                Group::Gl => lower_diag_upper(&mut rng, n),
                Group::Sl => {
                    unit_triangular(&mut rng, n, false).mul(&unit_triangular(&mut rng, n, true)).expect("square")
                }
            };
            GroupElement::Congruence { p }
        }
        fam => {
            let c = match fam {
                Family::SoSum => random_orthogonal(&mut rng, n),
                Family::SpSum => random_symplectic(&mut rng, n),
                Family::BSum => nonzero_diagonal(&mut rng, n).mul(&unit_triangular(&mut rng, n, true)).expect("square"),
                _ => lower_diag_upper(&mut rng, n),
            };
            let d = lower_diag_upper(&mut rng, spec.m());
            GroupElement::LeftRight { c, d }
        }
    }
}
