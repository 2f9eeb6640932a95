use serde::{Deserialize, Serialize};

use super::infinity::infinity_with_rank;
use super::kernel::horizontal_with_rank;
use super::smith::smith_form;
use super::{Pencil, PencilError};
use crate::arith::{exponent_of, gcd_free_basis, UniPoly};

/// A class of eigenvalues. `Finite(f)` stands for the roots of the monic
/// squarefree polynomial `f`, all sharing one Jordan pattern. At a root `μ`
/// of `f` the matrix `A + μB` drops rank, so in the `A - λB` convention the
/// eigenvalue is `-μ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EigenClass {
    Finite { poly: UniPoly },
    Infinity,
}

impl EigenClass {
    /// Number of distinct complex eigenvalues in the class.
    pub fn degree(&self) -> usize {
        match self {
            EigenClass::Finite { poly } => poly.degree().unwrap_or(0),
            EigenClass::Infinity => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanEntry {
    pub class: EigenClass,
    pub sizes: Vec<usize>,
}

/// Complete Jordan-Kronecker data of a pencil. All multisets are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JKInvariants {
    pub rank: usize,
    pub horizontal: Vec<usize>,
    pub vertical: Vec<usize>,
    pub jordan: Vec<JordanEntry>,
}

/// Characteristic polynomial `χ(α, β)` split into its finite part in λ and the
/// power of the factor at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPoly {
    pub finite_part: UniPoly,
    pub inf_exponent: usize,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.finite_part.degree().unwrap_or(0) + self.inf_exponent
    }
}

impl JKInvariants {
    /// Total size of the Jordan part, counting each root of a class.
    pub fn jordan_size(&self) -> usize {
        self.jordan.iter().map(|e| e.class.degree() * e.sizes.iter().sum::<usize>()).sum()
    }

    pub fn infinity_sizes(&self) -> &[usize] {
        self.jordan.iter().find(|e| e.class == EigenClass::Infinity).map_or(&[], |e| e.sizes.as_slice())
    }

    /// χ recovered from the Jordan data.
    pub fn charpoly(&self) -> CharPoly {
        let mut finite_part = UniPoly::one();
        let mut inf_exponent = 0;
        for e in &self.jordan {
            let total: usize = e.sizes.iter().sum();
            match &e.class {
                EigenClass::Finite { poly } => finite_part = &finite_part * &poly.pow(total as u32),
                EigenClass::Infinity => inf_exponent += total,
            }
        }
        CharPoly { finite_part, inf_exponent }
    }

    /// Checks the counting and size identities for a `rows x cols` pencil.
    pub fn check_identities(&self, rows: usize, cols: usize) -> Result<(), String> {
        let r = self.rank;
        if r > rows.min(cols) {
            return Err(format!("rank {r} exceeds shape {rows}x{cols}"));
        }
        if self.horizontal.len() != cols - r {
            return Err(format!("{} horizontal indices, expected cols - rank = {}", self.horizontal.len(), cols - r));
        }
        if self.vertical.len() != rows - r {
            return Err(format!("{} vertical indices, expected rows - rank = {}", self.vertical.len(), rows - r));
        }
        if self.horizontal.iter().chain(&self.vertical).any(|&x| x == 0) {
            return Err("Kronecker index 0".into());
        }
        let j = self.jordan_size();
        let sh: usize = self.horizontal.iter().sum();
        let sv: usize = self.vertical.iter().sum();
        let width = sh + sv - self.vertical.len() + j;
        if width != cols {
            return Err(format!("block widths sum to {width}, expected {cols}"));
        }
        let height = sh - self.horizontal.len() + sv + j;
        if height != rows {
            return Err(format!("block heights sum to {height}, expected {rows}"));
        }
        if sh + sv + r + j != rows + cols {
            return Err(format!(
                "h_tot + v_tot = {} but rows + cols - rank - deg χ = {}",
                sh + sv,
                (rows + cols) as i64 - (r + j) as i64
            ));
        }
        for w in self.jordan.windows(2) {
            if w[0].class >= w[1].class {
                return Err("eigenvalue classes not strictly ordered".into());
            }
        }
        for e in &self.jordan {
            if e.sizes.is_empty() || e.sizes.contains(&0) {
                return Err("empty or zero Jordan block list".into());
            }
            if let EigenClass::Finite { poly } = &e.class {
                if poly.degree().unwrap_or(0) == 0 || poly.leading().is_some_and(|c| !c.is_one()) {
                    return Err(format!("class polynomial {poly} is not monic nonconstant"));
                }
            }
        }
        Ok(())
    }
}

/// Rank, Kronecker indices and elementary divisor structure of `A + λB`.
pub fn jk_invariants(p: &Pencil) -> Result<JKInvariants, PencilError> {
    let smith = smith_form(p)?;
    let rank = smith.rank;
    let mut horizontal = horizontal_with_rank(p, rank)?;
    let mut vertical = horizontal_with_rank(&p.transpose(), rank)?;
    horizontal.sort_unstable();
    vertical.sort_unstable();

    let internal = |e: crate::arith::ArithError| PencilError::Internal(e.to_string());
    let nonconst: Vec<UniPoly> =
        smith.invariant_factors.iter().filter(|d| d.degree().unwrap_or(0) > 0).cloned().collect();
    let mut jordan = Vec::new();
    for b in gcd_free_basis(&nonconst).map_err(internal)? {
        let mut sizes = Vec::new();
        for d in &nonconst {
            let e = exponent_of(d, &b).map_err(internal)?;
            if e > 0 {
                sizes.push(e as usize);
            }
        }
        sizes.sort_unstable();
        jordan.push(JordanEntry { class: EigenClass::Finite { poly: b }, sizes });
    }
    let inf = infinity_with_rank(p, rank)?;
    if !inf.is_empty() {
        jordan.push(JordanEntry { class: EigenClass::Infinity, sizes: inf });
    }
    let inv = JKInvariants { rank, horizontal, vertical, jordan };
    inv.check_identities(p.rows(), p.cols()).map_err(PencilError::Internal)?;
    Ok(inv)
}

fn repeat_sorted(v: &[usize], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = v.iter().flat_map(|&x| std::iter::repeat_n(x, k)).collect();
    out.sort_unstable();
    out
}

/// Invariants of the k-fold direct sum of a pencil with itself.
pub fn replicate(inv: &JKInvariants, k: usize) -> Result<JKInvariants, PencilError> {
    if k == 0 {
        return Err(PencilError::ZeroReplication);
    }
    Ok(JKInvariants {
        rank: inv.rank * k,
        horizontal: repeat_sorted(&inv.horizontal, k),
        vertical: repeat_sorted(&inv.vertical, k),
        jordan: inv
            .jordan
            .iter()
            .map(|e| JordanEntry { class: e.class.clone(), sizes: repeat_sorted(&e.sizes, k) })
            .collect(),
    })
}
