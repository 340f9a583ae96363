//! Encode partial pairings as augmented cyclic Dyck paths and back.

use groves::dyck::{decode_path, encode_pairing, PartialPairing};

fn main() {
    for (text, n) in [("1,3|2,4", 4), ("1,4|2|6,7", 7), ("1,2|3,7|4,6", 7), ("1,3|2|4,10|5,6|7,9", 10)] {
        let tau = PartialPairing::parse(text, n).expect("valid pairing");
        let lambda = encode_pairing(&tau).expect("node n is paired");
        println!("{text:<22} -> {lambda:<12} {}", lambda.to_labeled_string());
        assert_eq!(decode_path(&lambda), tau);
    }

    let counts: Vec<usize> = (2..=7).map(|n| PartialPairing::all_encodable(n).len()).collect();
    println!("encodable pairings for n = 2..7: {counts:?}");
}
