//! Green's function and response matrix of a zipped graph, with their
//! first derivatives in the zipper variable.

use groves::graph::{green_data, response_data, AnnularGraph};

fn main() {
    let g = AnnularGraph::fixture("FIX-A").unwrap();
    print!("{g}");

    let green = green_data(&g).unwrap();
    println!("\nG (sink row and column zero):");
    for row in green.g.rows() {
        println!("  {}", row.iter().map(|x| format!("{x:>6}")).collect::<String>());
    }
    println!("G':");
    for row in green.gp.rows() {
        println!("  {}", row.iter().map(|x| format!("{x:>6}")).collect::<String>());
    }

    let resp = response_data(&g).unwrap();
    println!("L:");
    for row in resp.l.rows() {
        println!("  {}", row.iter().map(|x| format!("{x:>6}")).collect::<String>());
    }
    println!("L':");
    for row in resp.lp.rows() {
        println!("  {}", row.iter().map(|x| format!("{x:>6}")).collect::<String>());
    }
}
