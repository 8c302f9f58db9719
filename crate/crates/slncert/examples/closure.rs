//! Closure of the restricted monomial basis: products of u-monomials with
//! exponents < l reduce, modulo the presentation generators, to z-free
//! combinations of restricted u-monomials.

use slncert::presentation::{
    build_generators, closure_check, restricted_monomials, PresentationSpec, PresentationVariant,
};
use slncert::{Domain, Polynomial, Variable};

fn main() {
    let spec = PresentationSpec::new(3, 3, PresentationVariant::QuotientByD, 2).unwrap();
    let gens = build_generators(&spec).unwrap();
    let basis = restricted_monomials(&spec);
    println!(
        "restricted basis for n = 3, l = 3, t = 2: {} monomials (l^(n-1) * 2^t = 36)",
        basis.len()
    );

    // one reduction in full: u_1^2 * u_1^2 = u_1^4
    let u1 = Polynomial::variable(Domain::Integer, Variable::U(1));
    let nf = gens.normal_form(&u1.pow(4)).unwrap();
    println!("normal form of u_1^4 has {} terms, all z-free", nf.num_terms());

    let rec = closure_check(&spec, &gens, 7, 200).unwrap();
    for a in &rec.assertions {
        println!("{}: {} ({})", a.name, if a.ok { "pass" } else { "fail" }, a.witness);
    }
}
