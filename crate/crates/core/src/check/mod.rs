//! Structural laws every computed set of invariants must satisfy.

use serde::{Deserialize, Serialize};

use crate::pencil::{charpoly_via_minor_gcd, JKInvariants, Pencil, PencilError};
use crate::rep::{
    common_stabilizer_dim, image_sum_codim, orbit_codim, regular_point, stabilizer_dim, Point, RepError, RepSpec,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub status: Status,
}

impl Check {
    fn from_result(name: &str, r: Result<(), String>) -> Self {
        Check { name: name.into(), status: r.map_or_else(Status::Fail, |()| Status::Pass) }
    }

    fn equal(name: &str, what: &str, left: usize, right: usize) -> Self {
        let r = if left == right { Ok(()) } else { Err(format!("{what}: {left} vs {right}")) };
        Check::from_result(name, r)
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

fn count_of(v: &[usize], x: usize) -> usize {
    v.iter().filter(|&&y| y == x).count()
}

/// Index counts, block sizes, the totals identity and, under `minor_cap`,
/// agreement of the invariant factors with the gcd of maximal minors.
pub fn pencil_checks(p: &Pencil, inv: &JKInvariants, minor_cap: u128) -> Vec<Check> {
    let (rows, cols) = (p.rows(), p.cols());
    let mut out = vec![
        Check::equal(
            "horizontal_count",
            "|horizontal| vs cols - rank",
            inv.horizontal.len(),
            cols - inv.rank.min(cols),
        ),
        Check::equal("vertical_count", "|vertical| vs rows - rank", inv.vertical.len(), rows - inv.rank.min(rows)),
    ];
    let h_tot: usize = inv.horizontal.iter().sum();
    let v_tot: usize = inv.vertical.iter().sum();
    let chi = inv.charpoly();
    out.push(Check::equal(
        "totals_identity",
        "h_tot + v_tot + rank + deg χ vs rows + cols",
        h_tot + v_tot + inv.rank + chi.degree(),
        rows + cols,
    ));
    out.push(Check::from_result("identities", inv.check_identities(rows, cols)));
    let oracle = match charpoly_via_minor_gcd(p, minor_cap) {
        Ok(c) if c == chi => Status::Pass,
        Ok(c) => Status::Fail(format!(
            "invariant factors give ({}, ∞^{}), minors give ({}, ∞^{})",
            chi.finite_part, chi.inf_exponent, c.finite_part, c.inf_exponent
        )),
        Err(PencilError::OracleTooLarge { needed, cap }) => {
            Status::Skipped(format!("{needed} evaluations exceed cap {cap}"))
        }
        Err(e) => Status::Fail(e.to_string()),
    };
    out.push(Check { name: "minor_oracle".into(), status: oracle });
    out
}

/// Laws linking the invariants of `R_x + λR_a` to the representation:
/// trivial-index counts, index counts at a regular point, and the lower
/// bound on vertical 1s for large representations.
pub fn rep_checks(spec: &RepSpec, x: &Point, a: &Point, inv: &JKInvariants) -> Result<Vec<Check>, RepError> {
    let reg = regular_point(spec, x, a)?;
    let (dim_v, dim_g) = (spec.dim_v(), spec.dim_g());
    let v_ones = count_of(&inv.vertical, 1);
    let mut out = vec![
        Check::equal(
            "trivial_horizontal",
            "horizontal 1s vs dim(St_x ∩ St_a)",
            count_of(&inv.horizontal, 1),
            common_stabilizer_dim(spec, x, a)?,
        ),
        Check::equal("trivial_vertical", "vertical 1s vs codim(Im R_x + Im R_a)", v_ones, image_sum_codim(spec, x, a)?),
        Check::equal(
            "regular_stabilizer",
            "|horizontal| vs dim St_reg",
            inv.horizontal.len(),
            stabilizer_dim(spec, &reg)?,
        ),
        Check::equal("regular_orbit", "|vertical| vs codim O_reg", inv.vertical.len(), orbit_codim(spec, &reg)?),
    ];
    let bound = if dim_v > 2 * dim_g {
        if v_ones >= dim_v - 2 * dim_g {
            Ok(())
        } else {
            Err(format!("{v_ones} vertical 1s, at least {} required", dim_v - 2 * dim_g))
        }
    } else {
        Ok(())
    };
    out.push(Check::from_result("big_representation", bound));
    Ok(out)
}
