//! Companion-matrix certificates: for a with a_n = (-1)^(n-1), the
//! companion matrix x_a satisfies det(x_a) = 1, d(x_a) = 1,
//! Delta_{n-1}(x_a) = 0 and s_i(x_a) = (-1)^(i+1) a_i.

use slncert::invariants::{companion_matrix, verify_companion_certificates, CompanionSpec};

fn main() {
    let spec = CompanionSpec::new([5i64, -3, 1]);
    println!("companion matrix for a = (5, -3, 1):");
    for row in companion_matrix(&spec) {
        println!(
            "  [{}]",
            row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    let rec = verify_companion_certificates(&spec).unwrap();
    for a in &rec.assertions {
        println!(
            "{}: {} ({})",
            a.name,
            if a.ok { "pass" } else { "fail" },
            a.witness
        );
    }
}
