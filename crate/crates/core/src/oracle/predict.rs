use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::rep::{Family, Group, RepSpec};

/// Eigenvalue data of a prediction: every eigenvalue carries the same blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanSummary {
    pub distinct_eigenvalues: usize,
    pub blocks_per_eigenvalue: Vec<usize>,
}

/// Closed-form JK invariants of a representation. Multisets are sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedJK {
    pub horizontal: Vec<usize>,
    pub vertical: Vec<usize>,
    pub jordan: JordanSummary,
}

impl PredictedJK {
    /// Block widths sum to `cols` and heights to `rows`.
    pub fn check_block_sizes(&self, rows: usize, cols: usize) -> Result<(), String> {
        let sh: usize = self.horizontal.iter().sum();
        let sv: usize = self.vertical.iter().sum();
        let j = self.jordan.distinct_eigenvalues * self.jordan.blocks_per_eigenvalue.iter().sum::<usize>();
        let width = sh + sv + j - self.vertical.len();
        let height = sh + sv + j - self.horizontal.len();
        if width != cols || height != rows {
            return Err(format!("blocks are {height} high and {width} wide, expected {rows}x{cols}"));
        }
        Ok(())
    }
}

/// Accumulates `(value, count)` pairs; negative counts are errors, zero
/// counts are dropped.
struct Multiset {
    what: &'static str,
    items: Vec<usize>,
}

impl Multiset {
    fn new(what: &'static str) -> Self {
        Multiset { what, items: Vec::new() }
    }

    fn add(&mut self, value: i64, count: i64) -> Result<&mut Self, OracleError> {
        if count < 0 {
            return Err(OracleError::NegativeCount { what: self.what, value, count });
        }
        if count > 0 {
            if value < 1 {
                return Err(OracleError::NegativeCount { what: self.what, value, count });
            }
            self.items.extend(std::iter::repeat_n(value as usize, count as usize));
        }
        Ok(self)
    }

    fn done(mut self) -> Vec<usize> {
        self.items.sort_unstable();
        self.items
    }
}

fn jordan(distinct: usize, blocks: Vec<usize>) -> JordanSummary {
    if distinct == 0 {
        return JordanSummary::default();
    }
    JordanSummary { distinct_eigenvalues: distinct, blocks_per_eigenvalue: blocks }
}

fn build(h: Multiset, v: Multiset, j: JordanSummary) -> PredictedJK {
    PredictedJK { horizontal: h.done(), vertical: v.done(), jordan: j }
}

/// `m` copies of the standard representation of `gl(n)`.
pub fn predict_gl_sum(n: usize, m: usize) -> Result<PredictedJK, OracleError> {
    let (ni, mi) = (n as i64, m as i64);
    let mut h = Multiset::new("horizontal");
    let mut v = Multiset::new("vertical");
    let mut j = JordanSummary::default();
    if m < n {
        let d = ni - mi;
        let (q, r) = (mi / d, mi % d);
        h.add(q + 1, ni * (d - r))?.add(q + 2, ni * r)?;
    } else if m == n {
        j = jordan(n, vec![1; n]);
    } else {
        let d = mi - ni;
        let (q, r) = (ni / d, ni % d);
        v.add(q + 1, ni * (d - r))?.add(q + 2, ni * r)?;
    }
    Ok(build(h, v, j))
}

/// `m` copies of the standard representation of `sl(n)`.
pub fn predict_sl_sum(n: usize, m: usize) -> Result<PredictedJK, OracleError> {
    let (ni, mi) = (n as i64, m as i64);
    let mut h = Multiset::new("horizontal");
    let mut v = Multiset::new("vertical");
    let mut j = JordanSummary::default();
    if m < n {
        let d = ni - mi;
        let (q, r) = (mi / d, mi % d);
        h.add(q + 1, ni * (d - r) - (q + 1))?.add(q + 2, ni * r + q)?;
    } else if m == n {
        v.add(ni, 1)?;
        j = jordan(n, vec![1; n - 1]);
    } else {
        let d = mi - ni;
        let (q, r) = (ni / d, ni % d);
        if r != 0 {
            v.add(q + 1, ni * (d - r) + (q + 2))?.add(q + 2, ni * r - (q + 1))?;
        } else {
            v.add(q, q + 1)?.add(q + 1, ni * d - q)?;
        }
    }
    Ok(build(h, v, j))
}

/// `m` copies of the standard representation of `so(n)` (`eps = -1`) or
/// `sp(n)` (`eps = +1`).
pub fn predict_ortho_symp(n: usize, m: usize, eps: i64) -> Result<PredictedJK, OracleError> {
    let (ni, mi) = (n as i64, m as i64);
    let mut h = Multiset::new("horizontal");
    let mut v = Multiset::new("vertical");
    let mut j = JordanSummary::default();
    if m < n {
        let d = ni - mi;
        let (q, r) = (mi / d, mi % d);
        h.add(2 * q + 1, (d - r) * (d - r + eps) / 2)?
            .add(2 * q + 2, (d - r) * r)?
            .add(2 * q + 3, r * (r + eps) / 2)?;
        v.add(2, mi * (mi - eps) / 2)?;
    } else if m == n {
        if eps < 0 {
            v.add(1, ni)?.add(2, ni * (ni - 1) / 2)?;
        } else {
            v.add(2, ni * (ni - 1) / 2)?;
            j = jordan(n, vec![1]);
        }
    } else {
        v.add(1, (mi - ni - eps) * ni)?.add(2, ni * (ni + eps) / 2)?;
    }
    Ok(build(h, v, j))
}

/// `m` copies of the standard representation of `b(n)`. The closed form fixes
/// only the number of eigenvalues; their blocks are taken to be `1 x 1`.
pub fn predict_borel(n: usize, m: usize) -> Result<PredictedJK, OracleError> {
    let (ni, mi) = (n as i64, m as i64);
    let mut h = Multiset::new("horizontal");
    let mut v = Multiset::new("vertical");
    let mut j = JordanSummary::default();
    if m <= n {
        for jj in 1..=ni - mi {
            let (q, r) = (mi / jj, mi % jj);
            h.add(q + 1, jj - r)?.add(q + 2, r)?;
        }
        j = jordan(m, vec![1]);
        for jj in 1..mi {
            let (q, r) = (mi / jj, mi % jj);
            v.add(q, jj - r)?.add(q + 1, r)?;
        }
    } else {
        for jj in 1..=ni {
            let d = mi - jj;
            let (q, r) = (mi / d, mi % d);
            v.add(q, d - r)?.add(q + 1, r)?;
        }
    }
    Ok(build(h, v, j))
}

/// Standard representation of `n(n)`.
pub fn predict_nilpotent(n: usize) -> Result<PredictedJK, OracleError> {
    let ni = n as i64;
    let mut h = Multiset::new("horizontal");
    let mut v = Multiset::new("vertical");
    h.add(1, (ni - 3) * (ni - 2) / 2)?.add(2, ni - 2)?;
    v.add(1, 1)?;
    Ok(build(h, v, jordan(1, vec![1])))
}

/// Whether a congruence family acts on symmetric or skew-symmetric forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Sym,
    Skew,
}

/// Congruence action of `GL(V)` or `SL(V)` on `S²(V)` or `Λ²(V)`.
pub fn predict_cong(group: Group, kind: FormKind, dim_v: usize) -> Result<PredictedJK, OracleError> {
    let d = dim_v as i64;
    let mut h = Multiset::new("horizontal");
    let mut v = Multiset::new("vertical");
    let mut j = JordanSummary::default();
    match kind {
        FormKind::Sym => {
            h.add(2, d * (d - 1) / 2)?;
            match group {
                Group::Gl => j = jordan(dim_v, vec![1]),
                Group::Sl => {
                    v.add(d, 1)?;
                }
            }
        }
        FormKind::Skew if dim_v.is_multiple_of(2) => {
            let k = d / 2;
            h.add(1, 3 * k)?.add(2, 2 * k * (k - 1))?;
            match group {
                Group::Gl => j = jordan(dim_v / 2, vec![1]),
                Group::Sl => {
                    v.add(k, 1)?;
                }
            }
        }
        FormKind::Skew => {
            let k = d / 2;
            let delta = if group == Group::Gl { 1 } else { 0 };
            h.add(1, 2 * k + delta)?.add(2, k * (2 * k + 1))?;
        }
    }
    Ok(build(h, v, j))
}

/// Prediction for any valid spec, checked against the block-size identity.
pub fn predict(spec: &RepSpec) -> Result<PredictedJK, OracleError> {
    spec.validate()?;
    let (n, m) = (spec.n, spec.m());
    let p = match spec.family {
        Family::GlSum => predict_gl_sum(n, m),
        Family::SlSum => predict_sl_sum(n, m),
        Family::SoSum => predict_ortho_symp(n, m, -1),
        Family::SpSum => predict_ortho_symp(n, m, 1),
        Family::BSum => predict_borel(n, m),
        Family::NStd => predict_nilpotent(n),
        Family::CongSym => predict_cong(spec.group(), FormKind::Sym, n),
        Family::CongSkew => predict_cong(spec.group(), FormKind::Skew, n),
    }?;
    p.check_block_sizes(spec.dim_v(), spec.dim_g()).map_err(|e| OracleError::BlockSizes(format!("{spec}: {e}")))?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(p: &PredictedJK) -> (Vec<usize>, Vec<usize>) {
        (p.horizontal.clone(), p.vertical.clone())
    }

    fn eig(p: &PredictedJK) -> (usize, Vec<usize>) {
        (p.jordan.distinct_eigenvalues, p.jordan.blocks_per_eigenvalue.clone())
    }

    #[test]
    fn gl_examples() {
        assert_eq!(hv(&predict_gl_sum(3, 1).unwrap()), (vec![1, 1, 1, 2, 2, 2], vec![]));
        assert_eq!(eig(&predict_gl_sum(2, 2).unwrap()), (2, vec![1, 1]));
        assert_eq!(hv(&predict_gl_sum(1, 2).unwrap()), (vec![], vec![2]));
        assert_eq!(hv(&predict_gl_sum(2, 1).unwrap()), (vec![2, 2], vec![]));
    }

    #[test]
    fn sl_examples() {
        assert_eq!(hv(&predict_sl_sum(2, 1).unwrap()), (vec![3], vec![]));
        assert_eq!(hv(&predict_sl_sum(2, 3).unwrap()), (vec![], vec![2, 2, 2]));
        let p = predict_sl_sum(2, 2).unwrap();
        assert_eq!(hv(&p), (vec![], vec![2]));
        assert_eq!(eig(&p), (2, vec![1]));
    }

    #[test]
    fn ortho_symp_examples() {
        assert_eq!(hv(&predict_ortho_symp(3, 1, -1).unwrap()), (vec![2], vec![2]));
        let p = predict_ortho_symp(2, 2, 1).unwrap();
        assert_eq!(hv(&p), (vec![], vec![2]));
        assert_eq!(eig(&p), (2, vec![1]));
        assert_eq!(hv(&predict_ortho_symp(4, 2, -1).unwrap()), (vec![3], vec![2, 2, 2]));
    }

    #[test]
    fn borel_examples() {
        let p = predict_borel(2, 1).unwrap();
        assert_eq!(hv(&p), (vec![2], vec![]));
        assert_eq!(eig(&p), (1, vec![1]));
        assert_eq!(hv(&predict_borel(2, 3).unwrap()), (vec![], vec![1, 2, 3]));
        let p = predict_borel(3, 2).unwrap();
        assert_eq!(hv(&p), (vec![3], vec![2]));
        assert_eq!(eig(&p), (2, vec![1]));
    }

    #[test]
    fn nilpotent_examples() {
        let p = predict_nilpotent(3).unwrap();
        assert_eq!((hv(&p), eig(&p)), ((vec![2], vec![1]), (1, vec![1])));
        assert_eq!(hv(&predict_nilpotent(4).unwrap()), (vec![1, 2, 2], vec![1]));
        assert_eq!(hv(&predict_nilpotent(2).unwrap()), (vec![], vec![1]));
    }

    #[test]
    fn congruence_examples() {
        let p = predict_cong(Group::Gl, FormKind::Sym, 2).unwrap();
        assert_eq!((hv(&p), eig(&p)), ((vec![2], vec![]), (2, vec![1])));
        let p = predict_cong(Group::Sl, FormKind::Skew, 4).unwrap();
        assert_eq!(hv(&p), (vec![1, 1, 1, 1, 1, 1, 2, 2, 2, 2], vec![2]));
        assert_eq!(hv(&predict_cong(Group::Gl, FormKind::Skew, 3).unwrap()), (vec![1, 1, 1, 2, 2, 2], vec![]));
        let p = predict_cong(Group::Gl, FormKind::Skew, 4).unwrap();
        assert_eq!(eig(&p), (2, vec![1]));
    }

    #[test]
    fn negative_counts_are_reported() {
        let mut h = Multiset::new("horizontal");
        assert!(matches!(h.add(2, -1), Err(OracleError::NegativeCount { count: -1, .. })));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(predict(&RepSpec::sum(Family::GlSum, 0, 1)).is_err());
        assert!(predict(&RepSpec::sum(Family::SpSum, 3, 1)).is_err());
    }
}
