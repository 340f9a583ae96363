//! Path and tiling combinatorics: the encoding of partial pairings as
//! augmented cyclic Dyck paths, the order on them, cover-inclusive Dyck
//! tilings, and the cycle-lemma pairing used to order determinant rows.

mod aug;
mod matching;
mod path;
mod tiling;

pub use aug::{decode_path, encode_pairing, AugPath, PartialPairing, Symbol};
pub use matching::{crossing_number, cycle_lemma_pairing};
pub use path::{tree_labelings_count, DyckPath, Step};
pub use tiling::{count_ci_tilings, list_ci_tilings, Cell, DyckTiling, SkewShape};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("unknown path symbol {0:?}")]
    InvalidSymbol(char),
    #[error("augmented path needs exactly one F, found {0}")]
    FlatCount(usize),
    #[error("augmented path needs exactly one sink symbol O, in last position")]
    SinkPlacement,
    #[error("labels must be strictly increasing and positive")]
    LabelsNotIncreasing,
    #[error("U/D steps do not form a Dyck path")]
    NotDyck,
    #[error("pairs cross: no annular encoding exists")]
    CrossingPairs,
    #[error("node {0} (the sink) must be in a pair")]
    NodeNUnpaired(u32),
    #[error("invalid partial pairing: {0}")]
    BadPairing(String),
    #[error("upper path does not lie weakly above the lower path")]
    NotNested,
    #[error("paths have different lengths ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("invalid index partition: {0}")]
    BadPartition(String),
}
