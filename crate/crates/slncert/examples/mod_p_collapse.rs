//! Reduction mod p: when l is a power of p, every f_i collapses to the
//! single monomial u_i^l over F_p.

use slncert::symfun::{compute_f, SymFunTask};
use slncert::{Domain, MonomialOrder};

fn main() {
    for (n, l, p) in [(2u8, 3u32, 3u64), (3, 3, 3), (2, 9, 3), (3, 5, 5)] {
        for i in 1..n {
            let f = compute_f(&SymFunTask::new(n, l, i).unwrap()).unwrap();
            let fp = f.map_coefficients(Domain::Prime(p)).unwrap();
            let ord = MonomialOrder::degrevlex_u(n - 1);
            println!(
                "n = {n}, l = {l}, p = {p}: f_{i} has {} terms over Z, and mod {p} equals {}",
                f.num_terms(),
                fp.render(&ord)
            );
        }
    }
}
