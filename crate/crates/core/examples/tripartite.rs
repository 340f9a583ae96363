//! Source/sink Pfaffians of the response matrix on a circular-planar
//! network, checked against grove enumeration.

use std::collections::BTreeSet;

use groves::dyck::PartialPairing;
use groves::formulas::{cim_determinant, tripartite_pfaffian};
use groves::graph::{response_data, AnnularGraph};
use groves::oracle::{enumerate_groves, z_partial};

fn main() {
    let g = AnnularGraph::fixture("FIX-C").unwrap();
    let resp = response_data(&g).unwrap();
    let tally = enumerate_groves(&g).unwrap();
    let set = |xs: &[u32]| xs.iter().copied().collect::<BTreeSet<u32>>();

    let pf = tripartite_pfaffian(&resp, &set(&[1, 2]), &set(&[5, 6])).unwrap();
    let tau = PartialPairing::parse("1,6|2,3|4,5", 6).unwrap();
    let groves = z_partial(&tally, &tau).unwrap() / tally.all_separate();
    println!("Pf with B = {{1,2}}, C = {{5,6}}: {pf}   groves: {groves}");

    for (r, s) in [(1, 2), (1, 4), (3, 6)] {
        let mut blocks = vec![vec![r, s]];
        blocks.extend((1..=6).filter(|&x| x != r && x != s).map(|x| vec![x]));
        let det = cim_determinant(&resp.l, &[r], &[s]).unwrap();
        println!("L[{r}][{s}] = {det}   groves: {}", tally.weight(&blocks) / tally.all_separate());
    }
}
