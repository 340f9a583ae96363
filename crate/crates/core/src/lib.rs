//! Exact computation of topologically defined grove probabilities on
//! annulus-embedded graphs.
//!
//! Ratios `Z[tau]/Z[1,..,n]` and `Z[tau]/Z[1|..|n]` for partial pairings
//! `tau` are evaluated three independent ways: as tiling-weighted sums of
//! Pfaffians ([`formulas::theorem1_eval`]), as limits of determinant sums
//! ([`formulas::det_formula`]), and by brute-force enumeration of groves
//! ([`oracle`]).

pub mod cli;
pub mod dyck;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod oracle;
