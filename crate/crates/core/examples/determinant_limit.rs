//! The same ratios as limits of determinant sums, using the linear jets
//! and the full series in the zipper variable.

use groves::dyck::{encode_pairing, PartialPairing};
use groves::formulas::{b_series, det_formula_for_graph, Expansion, Mode};
use groves::graph::AnnularGraph;

fn main() {
    let lambda = groves::dyck::AugPath::parse("UDFUDO").unwrap();
    for s in [[2, 4, 6], [1, 2, 6], [3, 4, 6]] {
        let s_star = s.into_iter().collect();
        println!("B(UDFUDO, {s:?}) = {}", b_series(&lambda, &s_star, 4).unwrap());
    }

    let g = AnnularGraph::fixture("FIX-B").unwrap();
    for text in ["1,7|2,3|4,5", "1,6|2,7|5"] {
        let tau = PartialPairing::parse(text, 7).unwrap();
        let lambda = encode_pairing(&tau).unwrap();
        for mode in [Mode::G, Mode::L] {
            let linear = det_formula_for_graph(&lambda, &g, mode, Expansion::Linear).unwrap();
            let full = det_formula_for_graph(&lambda, &g, mode, Expansion::Full).unwrap();
            println!("{text:<12} {mode:?}: linear {linear}, full {full}");
        }
    }
}
