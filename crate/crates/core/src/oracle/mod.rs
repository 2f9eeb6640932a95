//! Closed-form JK invariants of the supported representations and their
//! comparison with computed invariants.

mod compare;
mod predict;

use crate::rep::RepError;

pub use compare::{compare, summarize, Comparison, ComputedSummary, MatchReport, Verdict};
pub use predict::{
    predict, predict_borel, predict_cong, predict_gl_sum, predict_nilpotent, predict_ortho_symp, predict_sl_sum,
    FormKind, JordanSummary, PredictedJK,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("closed form gives {count} {what} indices of value {value}")]
    NegativeCount { what: &'static str, value: i64, count: i64 },
    #[error("prediction violates the block-size identity: {0}")]
    BlockSizes(String),
    #[error(transparent)]
    Spec(#[from] RepError),
}
