//! Leading terms of the determinant and the semi-invariant d under the
//! lex order on the matrix variables.

use slncert::invariants::{compute_d, invariant_s, DMethod};
use slncert::MonomialOrder;

fn main() {
    for n in 2..=4u8 {
        let ord = MonomialOrder::lex_xi(n);
        let det = invariant_s(n, n).unwrap();
        let (m, c) = det.leading_term(&ord).unwrap();
        println!("n = {n}: LT(det) = {c}*{m}  ({} terms)", det.num_terms());
        let d = compute_d(n, DMethod::Determinant).unwrap();
        let (m, c) = d.leading_term(&ord).unwrap();
        println!("n = {n}: LT(d)   = {c}*{m}  ({} terms)", d.num_terms());
    }
}
