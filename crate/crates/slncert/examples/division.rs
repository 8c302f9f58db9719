//! The polynomial kernel: multivariate division with remainder and
//! S-polynomials over exact integer coefficients.

use slncert::{Domain, MonomialOrder, Polynomial, Variable};

fn main() {
    let ord = MonomialOrder::lex_x(2);
    let x = Polynomial::variable(Domain::Integer, Variable::X(1));
    let y = Polynomial::variable(Domain::Integer, Variable::X(2));
    let one = Polynomial::one(Domain::Integer);

    // divide x^2 y + x y^2 + y^2 by [x y - 1, y^2 - 1]
    let p = x.pow(2).mul(&y).add(&x.mul(&y.pow(2))).add(&y.pow(2));
    let divisors = [x.mul(&y).sub(&one), y.pow(2).sub(&one)];
    let res = p.divide_with_remainder(&divisors, &ord).unwrap();
    println!("p         = {}", p.render(&ord));
    for (q, g) in res.quotients.iter().zip(&divisors) {
        println!("quotient for {}: {}", g.render(&ord), q.render(&ord));
    }
    println!("remainder = {}", res.remainder.render(&ord));

    let s = divisors[0].s_polynomial(&divisors[1], &ord).unwrap();
    println!(
        "S({}, {}) = {}",
        divisors[0].render(&ord),
        divisors[1].render(&ord),
        s.render(&ord)
    );
}
