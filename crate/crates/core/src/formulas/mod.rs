//! Closed-form evaluation of grove ratios and the algebra behind it.
//!
//! The main entry points are [`theorem1_eval`] (a tiling-weighted sum of
//! Pfaffians) and [`det_formula`] (the `t -> 0` limit of a sum of
//! determinants). The remaining functions expose the intermediate
//! identities so they can be checked on their own.

mod determinant;
mod identity;
mod marked;
mod network;
mod theorem;
mod zstar;

pub use determinant::{
    b_series, det_formula, det_formula_for_graph, linearized, pinned_green_series, zstar_lambda, Expansion,
};
pub use identity::{d_r, directed_matching_sum, lemma_bcuv, pfaffian_sum_identity};
pub use marked::{build_m_sigma, to_bar, to_dddot, Jets, Mark, MarkedString};
pub use network::{alpha_beta_pf_matrix, cim_determinant, tripartite_matrix, tripartite_pfaffian, Slot};
pub use theorem::{corollary_checks, theorem1_eval, theorem1_symbolic, CorollaryReport, RatioResult, Term};
pub use zstar::{zstar_mu, Via, ZStar};

use thiserror::Error;

use crate::dyck::DyckError;
use crate::exact::ExactError;
use crate::graph::GraphError;

/// Which ratio family: `Z[tau]/Z[1,..,n]` (Green's function) or
/// `Z[tau]/Z[1|..|n]` (response matrix).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    G,
    L,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Dyck(#[from] DyckError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("value table is not symmetric (or derivative not antisymmetric) at ({0}, {1})")]
    AsymmetricInput(u32, u32),
    #[error("label {0} is outside the matrix")]
    LabelOutOfRange(u32),
    #[error("bad index set: {0}")]
    BadSet(String),
    #[error("bad blocks: {0}")]
    BadBlocks(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}
