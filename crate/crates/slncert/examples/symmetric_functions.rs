//! Expressing the elementary symmetric functions of l-th powers:
//! F_i with sigma_i(x^l) = F_i(sigma_1, .., sigma_n), and the dehomogenized
//! f_i = F_i(u_1, .., u_{n-1}, 1) with leading term u_i^l.

use slncert::symfun::{compute_big_f, compute_f, SymFunTask};
use slncert::MonomialOrder;

fn main() {
    for (n, l) in [(2u8, 3u32), (3, 3), (3, 5)] {
        for i in 1..n {
            let task = SymFunTask::new(n, l, i).unwrap();
            let big_f = compute_big_f(&task).unwrap();
            let f = compute_f(&task).unwrap();
            let ord = MonomialOrder::degrevlex_u(n);
            println!("n = {n}, l = {l}, i = {i}:");
            println!("  F_{i} = {}", big_f.render(&ord));
            println!("  f_{i} = {}", f.render(&MonomialOrder::degrevlex_u(n - 1)));
        }
    }
}
