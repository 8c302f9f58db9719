//! Groebner-basis verification of the presentation generators under the
//! block elimination order z > u > xi: coprime leading monomials and the
//! full Buchberger criterion.

use slncert::presentation::{
    build_generators, buchberger_check, coprime_lt_check, PresentationSpec, PresentationVariant,
};

fn main() {
    for variant in [PresentationVariant::Full, PresentationVariant::QuotientByD] {
        for n in 2..=3u8 {
            let spec = PresentationSpec::new(n, 3, variant, n - 1).unwrap();
            let gens = build_generators(&spec).unwrap();
            println!("n = {n}, l = 3, {variant:?}: {} generators", gens.generators.len());
            for g in &gens.generators {
                let (m, c) = g.leading_term(&gens.order).unwrap();
                println!("  LT = {c}*{m}  ({} terms)", g.num_terms());
            }
            let coprime = coprime_lt_check("coprime", &gens).unwrap();
            let buchberger = buchberger_check("buchberger", &gens).unwrap();
            println!(
                "  coprime leading monomials: {}; Buchberger criterion: {}",
                if coprime.passed() { "pass" } else { "fail" },
                if buchberger.passed() { "pass" } else { "fail" },
            );
        }
    }
}
