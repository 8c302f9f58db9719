//! Jacobian-minor certificates: integer witness matrices on which the
//! corner minor (resp. the semi-invariant d) vanishes while a designated
//! Jacobian minor is a unit.

use slncert::invariants::{
    verify_corner_minor_certificate, verify_semi_invariant_certificate,
};

fn main() {
    for n in 2..=5u8 {
        let rec = verify_corner_minor_certificate(n).unwrap();
        println!(
            "corner-minor certificate, n = {n}: {}",
            if rec.passed() { "pass" } else { "fail" }
        );
    }
    for n in 3..=4u8 {
        let rec = verify_semi_invariant_certificate(n).unwrap();
        println!(
            "semi-invariant certificate, n = {n}: {}",
            if rec.passed() { "pass" } else { "fail" }
        );
        for a in &rec.assertions {
            println!("  {}: {}", a.name, a.witness);
        }
    }
}
