use std::fmt;

use serde::{Deserialize, Serialize};

use super::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    GlSum,
    SlSum,
    SoSum,
    SpSum,
    BSum,
    NStd,
    CongSym,
    CongSkew,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::GlSum,
        Family::SlSum,
        Family::SoSum,
        Family::SpSum,
        Family::BSum,
        Family::NStd,
        Family::CongSym,
        Family::CongSkew,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GlSum => "gl_sum",
            Family::SlSum => "sl_sum",
            Family::SoSum => "so_sum",
            Family::SpSum => "sp_sum",
            Family::BSum => "b_sum",
            Family::NStd => "n_std",
            Family::CongSym => "cong_sym",
            Family::CongSkew => "cong_skew",
        }
    }

    /// Families acting on `m` copies of the standard representation.
    pub fn is_sum(self) -> bool {
        matches!(self, Family::GlSum | Family::SlSum | Family::SoSum | Family::SpSum | Family::BSum)
    }

    pub fn is_congruence(self) -> bool {
        matches!(self, Family::CongSym | Family::CongSkew)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Gl,
    Sl,
}

/// One representation: a family with its size parameters. `n` is the matrix
/// size of the group (for congruence families, `dim V`), `m` the number of
/// standard summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Group>,
}

impl RepSpec {
    pub fn sum(family: Family, n: usize, m: usize) -> Self {
        RepSpec { family, n, m: Some(m), group: None }
    }

    pub fn n_std(n: usize) -> Self {
        RepSpec { family: Family::NStd, n, m: None, group: None }
    }

    pub fn cong(family: Family, group: Group, n: usize) -> Self {
        RepSpec { family, n, m: None, group: Some(group) }
    }

    /// Number of summands; 0 for families without `m`.
    pub fn m(&self) -> usize {
        self.m.unwrap_or(0)
    }

    pub fn group(&self) -> Group {
        self.group.unwrap_or(Group::Gl)
    }

    pub fn validate(&self) -> Result<(), RepError> {
        let bad = |msg: String| Err(RepError::InvalidSpec(format!("{self}: {msg}")));
        let fam = self.family;
        if fam.is_sum() {
            let Some(m) = self.m else { return bad("field \"m\" is required".into()) };
            if self.group.is_some() {
                return bad("field \"group\" only applies to congruence families".into());
            }
            if m < 1 {
                return bad("m must be at least 1".into());
            }
        } else {
            if self.m.is_some() {
                return bad("field \"m\" does not apply to this family".into());
            }
            if fam.is_congruence() && self.group.is_none() {
                return bad("field \"group\" is required".into());
            }
            if fam == Family::NStd && self.group.is_some() {
                return bad("field \"group\" only applies to congruence families".into());
            }
        }
        let n = self.n;
        let min_n = match fam {
            Family::GlSum | Family::SoSum | Family::BSum => 1,
            Family::SlSum | Family::SpSum | Family::NStd | Family::CongSkew => 2,
            Family::CongSym if self.group() == Group::Sl => 2,
            Family::CongSym => 1,
        };
        if n < min_n {
            return bad(format!("n must be at least {min_n}"));
        }
        if fam == Family::SpSum && !n.is_multiple_of(2) {
            return bad("n must be even".into());
        }
        Ok(())
    }

    /// Dimension of the representation space.
    pub fn dim_v(&self) -> usize {
        let n = self.n;
        match self.family {
            Family::NStd => n,
            Family::CongSym => n * (n + 1) / 2,
            Family::CongSkew => n * (n - 1) / 2,
            _ => n * self.m(),
        }
    }

    /// Dimension of the Lie algebra.
    pub fn dim_g(&self) -> usize {
        let n = self.n;
        match self.family {
            Family::GlSum => n * n,
            Family::SlSum => n * n - 1,
            Family::SoSum | Family::NStd => n * (n - 1) / 2,
            Family::SpSum | Family::BSum => n * (n + 1) / 2,
            Family::CongSym | Family::CongSkew => match self.group() {
                Group::Gl => n * n,
                Group::Sl => n * n - 1,
            },
        }
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.group) {
            (Some(m), _) => write!(f, "{}(n={}, m={})", self.family, self.n, m),
            (None, Some(g)) => write!(f, "{}({}, n={})", self.family, if g == Group::Gl { "GL" } else { "SL" }, self.n),
            (None, None) => write!(f, "{}(n={})", self.family, self.n),
        }
    }
}
