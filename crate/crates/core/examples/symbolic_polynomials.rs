//! Formal polynomials in G, G' (or L, L') and the integrality and
//! coboundary checks.

use groves::dyck::AugPath;
use groves::formulas::corollary_checks;

fn main() {
    for word in ["DFUO", "UDFO", "USIDIFO"] {
        let lambda = AugPath::parse(word).unwrap();
        let r = corollary_checks(&lambda).unwrap();
        println!("{word}");
        println!("  G: {}", r.poly_g.display_with("G"));
        if r.poly_l.len() <= 8 {
            println!("  L: {}", r.poly_l.display_with("L"));
        } else {
            println!("  L: {} terms", r.poly_l.len());
        }
        println!("  integral {} / {}, coboundary invariant {}", r.integral_g, r.integral_l, r.coboundary_invariant);
    }
}
