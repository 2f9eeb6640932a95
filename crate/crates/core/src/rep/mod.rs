//! Representation operators `R_x: 𝔤 -> V, ξ ↦ ρ(ξ)x` for the supported
//! families, canonical and random points, and structural quantities.

mod basis;
mod canonical;
mod group;
mod ops;
mod point;
mod spec;

use crate::linalg::MatrixError;

pub use basis::{lie_basis, SparseMat};
pub use canonical::{canonical_pair, canonical_pair_with_seed, CANONICAL_BOUND};
pub use group::{check_admissible, group_transform, random_group_element, GroupElement};
pub use ops::{
    common_stabilizer_dim, image_sum_codim, jordan_count_at, operator_matrix, orbit_codim, regular_point, rep_pencil,
    stabilizer_dim,
};
pub use point::{random_pair, random_point, Point, SplitMix64};
pub use spec::{Family, Group, RepSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("invalid representation: {0}")]
    InvalidSpec(String),
    #[error("point shape: {0}")]
    Shape(String),
    #[error("point symmetry: {0}")]
    Symmetry(String),
    #[error("group element: {0}")]
    Group(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
