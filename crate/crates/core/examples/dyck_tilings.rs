//! Cover-inclusive Dyck tilings of a skew shape, and the identity that
//! their total over all upper paths counts increasing labelings of the
//! nesting forest.

use groves::dyck::{count_ci_tilings, list_ci_tilings, tree_labelings_count, DyckPath};

fn main() {
    let lower = DyckPath::parse("UDUDUD").unwrap();
    let upper = DyckPath::parse("UUUDDD").unwrap();
    let tilings = list_ci_tilings(&lower, &upper).unwrap();
    println!("{} tilings of {lower} / {upper}:", tilings.len());
    for t in &tilings {
        println!("{t}");
    }

    for k in 1..=4 {
        let all = DyckPath::all(k);
        for lower in &all {
            let total: u64 =
                all.iter().filter(|u| u.lies_above(lower)).map(|u| count_ci_tilings(lower, u).unwrap()).sum();
            println!("{lower:<10} tilings {total:>3}  labelings {}", tree_labelings_count(lower));
        }
    }
}
