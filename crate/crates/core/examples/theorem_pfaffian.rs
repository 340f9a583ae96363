//! Grove ratios as tiling-weighted sums of Pfaffians, compared with brute
//! force on the wheel graph.

use groves::dyck::{encode_pairing, PartialPairing};
use groves::formulas::{theorem1_eval, Jets, Mode};
use groves::graph::{green_data, response_data, AnnularGraph};
use groves::oracle::{enumerate_groves, ratio_bar, ratio_dot};

fn main() {
    let g = AnnularGraph::fixture("FIX-B").unwrap();
    let n = g.node_count();
    let tally = enumerate_groves(&g).unwrap();
    let jg = Jets::from_green(&green_data(&g).unwrap(), n);
    let jl = Jets::from_response(&response_data(&g).unwrap());

    for text in ["1,7|2,3|4,5", "1,2|3,7|4,6", "1,6|2,7|5", "2,7"] {
        let tau = PartialPairing::parse(text, n as u32).unwrap();
        let lambda = encode_pairing(&tau).unwrap();
        let bar = theorem1_eval(&lambda, &jg, Mode::G).unwrap();
        let dot = theorem1_eval(&lambda, &jl, Mode::L).unwrap();
        println!("{text}  ({lambda})");
        for t in &bar.terms {
            println!("    {} x Pf M({})", t.coefficient, t.mu);
        }
        println!("    Z[tau]/Z[1,..,n] = {}   (groves: {})", bar.value, ratio_bar(&tally, &tau).unwrap());
        println!("    Z[tau]/Z[1|..|n] = {}   (groves: {})", dot.value, ratio_dot(&tally, &tau).unwrap());
    }
}
