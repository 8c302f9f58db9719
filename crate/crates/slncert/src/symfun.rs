//! Symmetric-function calculus: elementary symmetric polynomials, the
//! conversion of a symmetric polynomial into elementaries by induction on
//! the lex-leading monomial, and the polynomials `F_i` / `f_i` expressing
//! the elementary symmetric functions of l-th powers.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Domain, Polynomial};
use crate::report::CheckRecord;
use crate::variable::Variable;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// Parameters for one conversion task: `n` x-variables, odd exponent `l`,
/// target index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymFunTask {
    pub n: u8,
    pub l: u32,
    pub i: u8,
}

impl SymFunTask {
    pub fn new(n: u8, l: u32, i: u8) -> Result<Self> {
        if l < 2 || l.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!("l must be odd and > 1, got {l}")));
        }
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i.to_string(),
                expected: format!("1..={}", n - 1),
            });
        }
        Ok(SymFunTask { n, l, i })
    }
}

/// The i-th elementary symmetric polynomial in `x_1..x_n`: the sum of all
/// squarefree degree-i monomials.
pub fn elementary_sigma(n: u8, i: u8) -> Result<Polynomial> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i.to_string(),
            expected: format!("1..={n}"),
        });
    }
    let mut acc = Polynomial::zero(Domain::Integer);
    for subset in (1..=n).combinations(i as usize) {
        acc.add_term(
            Monomial::from_pairs(subset.into_iter().map(|k| (Variable::X(k), 1))),
            BigInt::one(),
        );
    }
    Ok(acc)
}

/// Substitute `x_k -> x_k^l` by scaling exponents.
pub fn raise_x_powers(f: &Polynomial, l: u32) -> Polynomial {
    let mut out = Polynomial::zero(f.domain());
    for (m, c) in f.terms() {
        out.add_term(m.pow(l), c.clone());
    }
    out
}

/// Invariance under the adjacent transpositions of `x_1..x_n` (these
/// generate the full symmetric group).
pub fn is_symmetric(h: &Polynomial, n: u8) -> bool {
    for k in 1..n {
        let swapped = swap_x_vars(h, k, k + 1);
        if swapped != *h {
            return false;
        }
    }
    true
}

fn swap_x_vars(h: &Polynomial, a: u8, b: u8) -> Polynomial {
    let mut out = Polynomial::zero(h.domain());
    for (m, c) in h.terms() {
        let mapped = m.map_vars(|v| match v {
            Variable::X(k) if k == a => Variable::X(b),
            Variable::X(k) if k == b => Variable::X(a),
            other => other,
        });
        out.add_term(mapped, c.clone());
    }
    out
}

/// Number of monomials of total degree <= `deg` in `n` variables; the
/// iteration guard for the conversion loop.
fn monomial_count_bound(n: u8, deg: u64) -> usize {
    // C(deg + n, n), saturating
    let mut acc: u128 = 1;
    for k in 1..=n as u128 {
        acc = acc.saturating_mul(deg as u128 + k) / k;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Express a symmetric polynomial `h` in `x_1..x_n` as a polynomial `H`
/// in `u_1..u_n` with `h = H(sigma_1, .., sigma_n)`: repeatedly subtract
/// `c * sigma^beta`, where `x^alpha` is the lex-leading monomial of the
/// running polynomial and `beta_j = alpha_j - alpha_{j+1}`.
pub fn express_in_elementaries(h: &Polynomial, n: u8) -> Result<Polynomial> {
    if !is_symmetric(h, n) {
        return Err(Error::NotSymmetric(n));
    }
    let ord = MonomialOrder::lex_x(n);
    let sigmas: Vec<Polynomial> = (1..=n).map(|i| elementary_sigma(n, i)).collect::<Result<_>>()?;
    let bound = monomial_count_bound(n, h.total_degree()).saturating_mul(2);
    let mut rest = h.clone();
    let mut out = Polynomial::zero(Domain::Integer);
    let mut steps = 0usize;
    while !rest.is_zero() {
        steps += 1;
        if steps > bound {
            return Err(Error::IterationBoundExceeded(bound));
        }
        let (alpha, c) = rest.leading_term(&ord)?;
        let exps: Vec<u32> = (1..=n).map(|k| alpha.exponent(Variable::X(k))).collect();
        debug_assert!(
            exps.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial of a symmetric polynomial must be dominant"
        );
        let mut beta = Vec::with_capacity(n as usize);
        for j in 0..n as usize {
            let next = if j + 1 < n as usize { exps[j + 1] } else { 0 };
            beta.push(exps[j] - next);
        }
        out.add_term(
            Monomial::from_pairs(
                beta.iter()
                    .enumerate()
                    .map(|(j, &e)| (Variable::U(j as u8 + 1), e)),
            ),
            c.clone(),
        );
        let mut sigma_pow = Polynomial::constant(Domain::Integer, c);
        for (j, &e) in beta.iter().enumerate() {
            if e > 0 {
                sigma_pow = sigma_pow.mul(&sigmas[j].pow(e));
            }
        }
        rest = rest.sub(&sigma_pow);
    }
    Ok(out)
}

/// `F_i` in `u_1..u_n`: the expression of `sigma_i(x_1^l, .., x_n^l)` in
/// the elementary symmetric polynomials.
pub fn compute_big_f(task: &SymFunTask) -> Result<Polynomial> {
    let sigma = elementary_sigma(task.n, task.i)?;
    express_in_elementaries(&raise_x_powers(&sigma, task.l), task.n)
}

/// `f_i = F_i(u_1, .., u_{n-1}, 1)`.
pub fn compute_f(task: &SymFunTask) -> Result<Polynomial> {
    let big_f = compute_big_f(task)?;
    Ok(set_u_to_one(&big_f, task.n))
}

fn set_u_to_one(f: &Polynomial, index: u8) -> Polynomial {
    let mut out = Polynomial::zero(f.domain());
    for (m, c) in f.terms() {
        out.add_term(m.restrict(|v| v != Variable::U(index)), c.clone());
    }
    out
}

/// The substitution map `u_i -> sigma_i(x)`, for the oracle identity
/// `F_i(sigma_1, .., sigma_n) = sigma_i(x^l)`.
pub fn sigma_substitution(n: u8) -> Result<BTreeMap<Variable, Polynomial>> {
    (1..=n)
        .map(|i| Ok((Variable::U(i), elementary_sigma(n, i)?)))
        .collect()
}

/// Structural facts about `f_i` and `F_i`: the leading term is `u_i^l`
/// with coefficient 1 under degrevlex, the remaining monomials of `f_i`
/// have total degree <= l and exponents < l, every monomial of
/// `F_i - u_i^l` contains some `u_j` with `j > i`, and for n = 2 the
/// degree of `f_1` is exactly the odd number l.
pub fn check_f_properties(task: &SymFunTask) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("f_properties_n{}_l{}_i{}", task.n, task.l, task.i),
        "LT(f_i) = u_i^l; monomials of f_i - u_i^l have degree <= l and exponents < l",
    );
    let big_f = compute_big_f(task)?;
    let f = set_u_to_one(&big_f, task.n);
    let ord = MonomialOrder::degrevlex_u(task.n - 1);
    let (lm, lc) = f.leading_term(&ord)?;
    let expect = Monomial::var_pow(Variable::U(task.i), task.l);
    rec.assert_that(
        "LT(f_i) monomial is u_i^l",
        lm == expect,
        format!("LT = {lc}*{lm}"),
    );
    rec.assert_that("LT(f_i) coefficient is 1", lc.is_one(), format!("coeff = {lc}"));

    let head = Polynomial::from_term(Domain::Integer, expect.clone(), 1);
    let tail = f.sub(&head);
    let mut degree_ok = true;
    let mut exps_ok = true;
    for m in tail.monomials() {
        if m.total_degree() > task.l as u64 {
            degree_ok = false;
        }
        if m.iter().any(|(_, e)| e >= task.l) {
            exps_ok = false;
        }
    }
    rec.assert_that(
        "monomials of f_i - u_i^l have total degree <= l",
        degree_ok,
        format!("max degree = {}", tail.total_degree()),
    );
    rec.assert_that(
        "monomials of f_i - u_i^l have exponents < l",
        exps_ok,
        "exponent scan",
    );

    let big_tail = big_f.sub(&Polynomial::from_term(Domain::Integer, expect, 1));
    let later_var_ok = big_tail
        .monomials()
        .all(|m| m.vars().any(|v| matches!(v, Variable::U(j) if j > task.i)));
    rec.assert_that(
        "every monomial of F_i - u_i^l contains u_j with j > i",
        later_var_ok,
        "support scan of F_i - u_i^l",
    );

    if task.n == 2 {
        let deg = f.total_degree();
        rec.assert_that(
            "f_1 has odd degree exactly l (n = 2)",
            deg == task.l as u64 && deg % 2 == 1,
            format!("degree = {deg}"),
        );
    }
    Ok(rec)
}

/// In characteristic p with l a power of p, `f_i` collapses to `u_i^l`.
pub fn check_f_mod_p(task: &SymFunTask, p: u64) -> Result<CheckRecord> {
    let mut is_power = task.l as u64 >= p;
    let mut q = task.l as u64;
    while is_power && q > 1 {
        if !q.is_multiple_of(p) {
            is_power = false;
        } else {
            q /= p;
        }
    }
    if !is_power {
        return Err(Error::InvalidConfig(format!(
            "l = {} is not a power of p = {p}",
            task.l
        )));
    }
    let mut rec = CheckRecord::new(
        format!("f_mod_p_n{}_l{}_p{p}_i{}", task.n, task.l, task.i),
        "f_i = u_i^l mod p when l is a power of p",
    );
    let f = compute_f(task)?;
    let fp = f.map_coefficients(Domain::Prime(p))?;
    let expect = Polynomial::from_term(
        Domain::Prime(p),
        Monomial::var_pow(Variable::U(task.i), task.l),
        1,
    );
    let ok = fp == expect;
    rec.assert_that(
        "f_i mod p = u_i^l",
        ok,
        format!(
            "f_{} mod {p} = {}",
            task.i,
            fp.render(&MonomialOrder::degrevlex_u(task.n - 1))
        ),
    );
    Ok(rec)
}

/// Monomial facts about `sigma_i(x^l) - sigma_i^l` on the x side: every
/// monomial has at least i+1 distinct variables, exponents <= l, and at
/// most i exponents equal to l.
pub fn check_x_side_properties(n: u8, l: u32, i: u8) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("x_side_properties_n{n}_l{l}_i{i}"),
        ">= i+1 variables, exponents <= l, at most i exponents equal to l",
    );
    let sigma = elementary_sigma(n, i)?;
    let diff = raise_x_powers(&sigma, l).sub(&sigma.pow(l));
    let mut support_ok = true;
    let mut exp_ok = true;
    let mut count_ok = true;
    for m in diff.monomials() {
        if m.support_size() < i as usize + 1 {
            support_ok = false;
        }
        if m.iter().any(|(_, e)| e > l) {
            exp_ok = false;
        }
        if m.iter().filter(|&(_, e)| e == l).count() > i as usize {
            count_ok = false;
        }
    }
    rec.assert_that(
        "monomials have at least i+1 variables",
        support_ok,
        format!("{} monomials scanned", diff.num_terms()),
    );
    rec.assert_that("exponents are <= l", exp_ok, "exponent scan");
    rec.assert_that(
        "at most i exponents equal to l",
        count_ok,
        "exponent multiplicity scan",
    );
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uvar(k: u8) -> Polynomial {
        Polynomial::variable(Domain::Integer, Variable::U(k))
    }

    fn xvar(k: u8) -> Polynomial {
        Polynomial::variable(Domain::Integer, Variable::X(k))
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(elementary_sigma(2, 1).unwrap(), xvar(1).add(&xvar(2)));
        assert_eq!(
            elementary_sigma(3, 3).unwrap(),
            xvar(1).mul(&xvar(2)).mul(&xvar(3))
        );
        let s32 = elementary_sigma(3, 2).unwrap();
        let expect = xvar(1)
            .mul(&xvar(2))
            .add(&xvar(1).mul(&xvar(3)))
            .add(&xvar(2).mul(&xvar(3)));
        assert_eq!(s32, expect);
        assert!(elementary_sigma(3, 4).is_err());
    }

    #[test]
    fn express_fixed_point() {
        let h = elementary_sigma(3, 2).unwrap();
        assert_eq!(express_in_elementaries(&h, 3).unwrap(), uvar(2));
    }

    #[test]
    fn express_power_sums() {
        // x1^2 + x2^2 = u1^2 - 2 u2
        let h = xvar(1).pow(2).add(&xvar(2).pow(2));
        let expect = uvar(1).pow(2).sub(&uvar(2).scale(&BigInt::from(2)));
        assert_eq!(express_in_elementaries(&h, 2).unwrap(), expect);
        // x1^3 + x2^3 + x3^3 = u1^3 - 3 u1 u2 + 3 u3
        let h = xvar(1).pow(3).add(&xvar(2).pow(3)).add(&xvar(3).pow(3));
        let expect = uvar(1)
            .pow(3)
            .sub(&uvar(1).mul(&uvar(2)).scale(&BigInt::from(3)))
            .add(&uvar(3).scale(&BigInt::from(3)));
        assert_eq!(express_in_elementaries(&h, 3).unwrap(), expect);
    }

    #[test]
    fn express_rejects_asymmetric_input() {
        let h = xvar(1).pow(2).add(&xvar(2));
        assert!(matches!(
            express_in_elementaries(&h, 2),
            Err(Error::NotSymmetric(2))
        ));
    }

    #[test]
    fn big_f_examples() {
        let t = SymFunTask::new(2, 3, 1).unwrap();
        let expect = uvar(1)
            .pow(3)
            .sub(&uvar(1).mul(&uvar(2)).scale(&BigInt::from(3)));
        assert_eq!(compute_big_f(&t).unwrap(), expect);
        let t = SymFunTask::new(3, 3, 1).unwrap();
        let expect = uvar(1)
            .pow(3)
            .sub(&uvar(1).mul(&uvar(2)).scale(&BigInt::from(3)))
            .add(&uvar(3).scale(&BigInt::from(3)));
        assert_eq!(compute_big_f(&t).unwrap(), expect);
    }

    #[test]
    fn sigma_n_of_powers_is_sigma_n_to_the_l() {
        // diagnostic extension i = n: sigma_n(x^l) = u_n^l
        let sigma = elementary_sigma(3, 3).unwrap();
        let h = raise_x_powers(&sigma, 3);
        let expect = uvar(3).pow(3);
        assert_eq!(express_in_elementaries(&h, 3).unwrap(), expect);
    }

    #[test]
    fn f_examples() {
        let t = SymFunTask::new(2, 3, 1).unwrap();
        let expect = uvar(1).pow(3).sub(&uvar(1).scale(&BigInt::from(3)));
        assert_eq!(compute_f(&t).unwrap(), expect);
        let t = SymFunTask::new(3, 3, 1).unwrap();
        let expect = uvar(1)
            .pow(3)
            .sub(&uvar(1).mul(&uvar(2)).scale(&BigInt::from(3)))
            .add(&Polynomial::constant(Domain::Integer, 3));
        assert_eq!(compute_f(&t).unwrap(), expect);
    }

    #[test]
    fn substitution_oracle_small() {
        for (n, l) in [(2u8, 3u32), (3, 3), (3, 5)] {
            let map = sigma_substitution(n).unwrap();
            for i in 1..n {
                let t = SymFunTask::new(n, l, i).unwrap();
                let big_f = compute_big_f(&t).unwrap();
                let lhs = big_f.substitute(&map).unwrap();
                let rhs = raise_x_powers(&elementary_sigma(n, i).unwrap(), l);
                assert_eq!(lhs, rhs, "n={n} l={l} i={i}");
            }
        }
    }

    #[test]
    fn properties_hold() {
        for (n, l) in [(2u8, 3u32), (3, 3), (4, 5)] {
            for i in 1..n {
                let t = SymFunTask::new(n, l, i).unwrap();
                let rec = check_f_properties(&t).unwrap();
                assert!(
                    rec.passed(),
                    "n={n} l={l} i={i}: {:?}",
                    rec.failures().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn mod_p_collapse() {
        let t = SymFunTask::new(2, 3, 1).unwrap();
        assert!(check_f_mod_p(&t, 3).unwrap().passed());
        let t = SymFunTask::new(3, 3, 1).unwrap();
        assert!(check_f_mod_p(&t, 3).unwrap().passed());
        // l not a power of p is a precondition violation
        let t = SymFunTask::new(2, 9, 1).unwrap();
        assert!(matches!(check_f_mod_p(&t, 5), Err(Error::InvalidConfig(_))));
        assert!(check_f_mod_p(&t, 3).unwrap().passed());
    }

    #[test]
    fn x_side_scan() {
        for (n, l) in [(3u8, 3u32), (4, 5)] {
            for i in 1..n {
                let rec = check_x_side_properties(n, l, i).unwrap();
                assert!(rec.passed(), "n={n} l={l} i={i}");
            }
        }
    }

    #[test]
    fn task_validation() {
        assert!(SymFunTask::new(3, 4, 1).is_err());
        assert!(SymFunTask::new(3, 1, 1).is_err());
        assert!(SymFunTask::new(3, 3, 3).is_err());
        assert!(SymFunTask::new(3, 3, 0).is_err());
    }
}
