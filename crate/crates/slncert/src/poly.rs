//! Sparse multivariate polynomials with exact arbitrary-precision integer
//! coefficients, over the integers or a prime field.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::variable::Variable;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Coefficient domain: the integers or the field with `p` elements
/// (`p` an odd prime). Prime-field coefficients are stored as reduced
/// representatives in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Domain {
    Integer,
    Prime(u64),
}

impl Domain {
    fn reduce(&self, c: BigInt) -> BigInt {
        match self {
            Domain::Integer => c,
            Domain::Prime(p) => c.mod_floor(&BigInt::from(*p)),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => write!(f, "Z"),
            Domain::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    domain: Domain,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(domain: Domain) -> Self {
        Polynomial {
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(domain: Domain, c: impl Into<BigInt>) -> Self {
        let mut f = Polynomial::zero(domain);
        f.add_term(Monomial::one(), c.into());
        f
    }

    pub fn one(domain: Domain) -> Self {
        Polynomial::constant(domain, 1)
    }

    pub fn variable(domain: Domain, v: Variable) -> Self {
        let mut f = Polynomial::zero(domain);
        f.add_term(Monomial::var(v), BigInt::one());
        f
    }

    pub fn from_term(domain: Domain, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut f = Polynomial::zero(domain);
        f.add_term(m, c.into());
        f
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// The set of variables that actually occur.
    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn contains_variable(&self, pred: impl Fn(Variable) -> bool) -> bool {
        self.terms.keys().any(|m| m.vars().any(&pred))
    }

    /// Accumulate `c * m`, pruning a resulting zero coefficient.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        let c = self.domain.reduce(c);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.domain.reduce(e.get() + c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn same_domain(&self, other: &Polynomial) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(
                self.domain.to_string(),
                other.domain.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_domain(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_domain(other)?;
        let mut out = Polynomial::zero(self.domain);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.try_add(other).expect("domain mismatch")
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.try_sub(other).expect("domain mismatch")
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.try_mul(other).expect("domain mismatch")
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.domain);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero(self.domain);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.domain);
        for (mm, c) in &self.terms {
            out.add_term(mm.mul(m), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.domain);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under `ord`. Errors on the zero polynomial and on
    /// variables outside the order's universe.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, BigInt)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut best: Option<&Monomial> = None;
        for m in self.terms.keys() {
            ord.check_universe(m)?;
            best = Some(match best {
                None => m,
                Some(b) => ord.max(b, m),
            });
        }
        let m = best.expect("nonzero polynomial").clone();
        let c = self.terms[&m].clone();
        Ok((m, c))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    pub fn partial_derivative(&self, v: Variable) -> Polynomial {
        let mut out = Polynomial::zero(self.domain);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(Variable, u32)> = m.iter().collect();
            for p in pairs.iter_mut() {
                if p.0 == v {
                    p.1 -= 1;
                }
            }
            out.add_term(Monomial::from_pairs(pairs), c * BigInt::from(e));
        }
        out
    }

    /// Value at a point given by a total assignment of the variables.
    pub fn evaluate(&self, point: &BTreeMap<Variable, BigInt>) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                let val = point.get(&v).ok_or(Error::MissingBinding(v))?;
                term *= val.pow(e);
            }
            acc += term;
        }
        Ok(self.domain.reduce(acc))
    }

    /// Substitute polynomials for variables; variables missing from the
    /// map are kept as themselves.
    pub fn substitute(&self, map: &BTreeMap<Variable, Polynomial>) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.domain);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(self.domain, c.clone());
            for (v, e) in m.iter() {
                match map.get(&v) {
                    Some(g) => {
                        self.same_domain(g)?;
                        term = term.try_mul(&g.pow(e))?;
                    }
                    None => term = term.mul_monomial(&Monomial::var_pow(v, e)),
                }
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Coefficientwise reduction into a prime field.
    pub fn map_coefficients(&self, target: Domain) -> Result<Polynomial> {
        match (self.domain, target) {
            (Domain::Integer, Domain::Prime(_)) => {
                let mut out = Polynomial::zero(target);
                for (m, c) in &self.terms {
                    out.add_term(m.clone(), c.clone());
                }
                Ok(out)
            }
            _ => Err(Error::UnsupportedCoefficientMap),
        }
    }

    fn coeff_is_unit(&self, c: &BigInt) -> bool {
        match self.domain {
            Domain::Integer => c.magnitude().is_one(),
            Domain::Prime(_) => !c.is_zero(),
        }
    }

    fn coeff_inverse(&self, c: &BigInt) -> Result<BigInt> {
        match self.domain {
            Domain::Integer => {
                if c.magnitude().is_one() {
                    Ok(c.clone())
                } else {
                    Err(Error::NonUnitLeadingCoefficient(c.to_string()))
                }
            }
            Domain::Prime(p) => {
                let p = BigInt::from(p);
                let egcd = c.extended_gcd(&p);
                if !egcd.gcd.is_one() {
                    return Err(Error::NonUnitLeadingCoefficient(c.to_string()));
                }
                Ok(egcd.x.mod_floor(&p))
            }
        }
    }

    /// Multivariate division with remainder. Divisors are tried in list
    /// order; over the integers every divisor must have leading
    /// coefficient +-1.
    pub fn divide_with_remainder(
        &self,
        divisors: &[Polynomial],
        ord: &MonomialOrder,
    ) -> Result<DivisionResult> {
        let mut leads = Vec::with_capacity(divisors.len());
        for g in divisors {
            self.same_domain(g)?;
            let (m, c) = g.leading_term(ord)?;
            if !g.coeff_is_unit(&c) {
                return Err(Error::NonUnitLeadingCoefficient(c.to_string()));
            }
            let inv = g.coeff_inverse(&c)?;
            leads.push((m, inv));
        }
        let mut quotients = vec![Polynomial::zero(self.domain); divisors.len()];
        let mut remainder = Polynomial::zero(self.domain);
        let mut p = self.clone();
        while !p.is_zero() {
            let (pm, pc) = p.leading_term(ord)?;
            match leads.iter().position(|(lm, _)| lm.divides(&pm)) {
                Some(i) => {
                    let (lm, inv) = &leads[i];
                    let qm = lm.divide_into(&pm).expect("divisibility just checked");
                    let qc = self.domain.reduce(&pc * inv);
                    let t = Polynomial::from_term(self.domain, qm, qc);
                    p = p.try_sub(&t.try_mul(&divisors[i])?)?;
                    quotients[i] = quotients[i].try_add(&t)?;
                }
                None => {
                    p.add_term(pm.clone(), -&pc);
                    remainder.add_term(pm, pc);
                }
            }
        }
        Ok(DivisionResult {
            quotients,
            remainder,
        })
    }

    /// Remainder of division only.
    pub fn reduce(&self, divisors: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
        Ok(self.divide_with_remainder(divisors, ord)?.remainder)
    }

    /// Exact single-divisor division: errors unless `self = q * g`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        self.same_domain(g)?;
        if g.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        // any total monomial order over all occurring variables works here;
        // use lex over the structural variable order
        let mut vars: Vec<Variable> = self.variables().union(&g.variables()).copied().collect();
        vars.sort();
        let lm_of = |f: &Polynomial| -> Monomial {
            f.terms
                .keys()
                .max_by(|a, b| struct_lex_cmp(&vars, a, b))
                .cloned()
                .expect("nonzero")
        };
        let gm = lm_of(g);
        let gc = g.terms[&gm].clone();
        let mut p = self.clone();
        let mut q = Polynomial::zero(self.domain);
        while !p.is_zero() {
            let pm = lm_of(&p);
            let pc = p.terms[&pm].clone();
            let qm = gm
                .divide_into(&pm)
                .ok_or_else(|| Error::InexactDivision(format!("monomial {pm} not divisible")))?;
            let qc = match self.domain {
                Domain::Integer => {
                    let (quot, rem) = pc.div_rem(&gc);
                    if !rem.is_zero() {
                        return Err(Error::InexactDivision(format!(
                            "coefficient {pc} not divisible by {gc}"
                        )));
                    }
                    quot
                }
                Domain::Prime(_) => self.domain.reduce(&pc * g.coeff_inverse(&gc)?),
            };
            let t = Polynomial::from_term(self.domain, qm, qc);
            p = p.try_sub(&t.try_mul(g)?)?;
            q = q.try_add(&t)?;
        }
        Ok(q)
    }

    /// The S-polynomial of two nonzero polynomials under `ord`, with the
    /// leading coefficients normalised away (they must be units).
    pub fn s_polynomial(&self, other: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
        self.same_domain(other)?;
        let (fm, fc) = self.leading_term(ord)?;
        let (gm, gc) = other.leading_term(ord)?;
        if !self.coeff_is_unit(&fc) || !other.coeff_is_unit(&gc) {
            return Err(Error::NonUnitLeadingCoefficient(format!("{fc}, {gc}")));
        }
        let l = fm.lcm(&gm);
        let mf = fm.divide_into(&l).expect("lcm divisible by lm");
        let mg = gm.divide_into(&l).expect("lcm divisible by lm");
        let a = self.mul_monomial(&mf).scale(&self.coeff_inverse(&fc)?);
        let b = other.mul_monomial(&mg).scale(&other.coeff_inverse(&gc)?);
        a.try_sub(&b)
    }

    /// Render in the report text format, terms in descending `ord` order.
    pub fn render(&self, ord: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| ord.cmp(b, a));
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{mag}*{m}"));
            }
        }
        out
    }
}

/// Result of multivariate division: `dividend = sum q_i g_i + remainder`,
/// and no monomial of the remainder is divisible by any divisor's leading
/// monomial.
#[derive(Clone, Debug)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn struct_lex_cmp(vars: &[Variable], a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    for &v in vars {
        match a.exponent(v).cmp(&b.exponent(v)) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Domain {
        Domain::Integer
    }

    fn xv(k: u8) -> Polynomial {
        Polynomial::variable(z(), Variable::X(k))
    }

    fn uv(k: u8) -> Polynomial {
        Polynomial::variable(z(), Variable::U(k))
    }

    fn xi(i: u8, j: u8) -> Polynomial {
        Polynomial::variable(z(), Variable::xi(i, j))
    }

    fn det2() -> Polynomial {
        xi(1, 1).mul(&xi(2, 2)).sub(&xi(1, 2).mul(&xi(2, 1)))
    }

    #[test]
    fn add_cancels() {
        let f = xv(1).add(&Polynomial::one(z()));
        let g = xv(1).neg();
        assert_eq!(f.add(&g), Polynomial::one(z()));
        assert_eq!(f.add(&Polynomial::zero(z())), f);
        let h = det2().add(&xi(1, 2).mul(&xi(2, 1)));
        assert_eq!(h, xi(1, 1).mul(&xi(2, 2)));
    }

    #[test]
    fn mul_examples() {
        let f = uv(1).sub(&Polynomial::one(z()));
        let g = uv(1).add(&Polynomial::one(z()));
        let expect = uv(1).mul(&uv(1)).sub(&Polynomial::one(z()));
        assert_eq!(f.mul(&g), expect);
        assert_eq!(f.mul(&Polynomial::one(z())), f);
    }

    #[test]
    fn freshman_dream_mod_3() {
        let f3 = Domain::Prime(3);
        let f = Polynomial::variable(f3, Variable::U(1)).add(&Polynomial::one(f3));
        let cube = f.pow(3);
        let expect = Polynomial::from_term(f3, Monomial::var_pow(Variable::U(1), 3), 1)
            .add(&Polynomial::one(f3));
        assert_eq!(cube, expect);
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let f = Polynomial::one(Domain::Integer);
        let g = Polynomial::one(Domain::Prime(3));
        assert!(matches!(f.try_add(&g), Err(Error::DomainMismatch(_, _))));
        assert!(matches!(f.try_mul(&g), Err(Error::DomainMismatch(_, _))));
    }

    #[test]
    fn leading_term_of_det2_under_lex_xi() {
        let ord = MonomialOrder::lex_xi(2);
        let (m, c) = det2().leading_term(&ord).unwrap();
        assert_eq!(
            m,
            Monomial::var(Variable::xi(2, 2)).mul(&Monomial::var(Variable::xi(1, 1)))
        );
        assert_eq!(c, BigInt::from(1));
    }

    #[test]
    fn leading_term_of_constant() {
        let ord = MonomialOrder::lex_xi(2);
        let f = Polynomial::constant(z(), 5);
        let (m, c) = f.leading_term(&ord).unwrap();
        assert!(m.is_one());
        assert_eq!(c, BigInt::from(5));
    }

    #[test]
    fn leading_term_errors() {
        let ord = MonomialOrder::lex_xi(2);
        assert!(matches!(
            Polynomial::zero(z()).leading_term(&ord),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            uv(1).leading_term(&ord),
            Err(Error::VariableOutsideOrder(_))
        ));
    }

    #[test]
    fn derivative_of_det2() {
        let d12 = det2().partial_derivative(Variable::xi(1, 2));
        assert_eq!(d12, xi(2, 1).neg());
        let c = Polynomial::constant(z(), 42).partial_derivative(Variable::X(1));
        assert!(c.is_zero());
        let s1 = xi(1, 1).add(&xi(2, 2));
        assert_eq!(
            s1.partial_derivative(Variable::xi(2, 2)),
            Polynomial::one(z())
        );
    }

    #[test]
    fn evaluate_at_point() {
        let mut point = BTreeMap::new();
        for (i, j, v) in [(1u8, 1u8, 0i64), (1, 2, -1), (2, 1, 1), (2, 2, 7)] {
            point.insert(Variable::xi(i, j), BigInt::from(v));
        }
        // d for n=2 is xi_2_1; at the companion matrix it is 1
        assert_eq!(xi(2, 1).evaluate(&point).unwrap(), BigInt::from(1));
        assert_eq!(det2().evaluate(&point).unwrap(), BigInt::from(1));
        let missing = BTreeMap::new();
        assert!(matches!(
            det2().evaluate(&missing),
            Err(Error::MissingBinding(_))
        ));
        // at all zeros only the constant term survives
        let f = det2().add(&Polynomial::constant(z(), 9));
        let zeros: BTreeMap<Variable, BigInt> = f
            .variables()
            .into_iter()
            .map(|v| (v, BigInt::zero()))
            .collect();
        assert_eq!(f.evaluate(&zeros).unwrap(), BigInt::from(9));
    }

    #[test]
    fn division_basics() {
        let ord = MonomialOrder::presentation_block(2);
        // a monomial not divisible by any leading monomial passes through
        let f = uv(1).mul(&xi(1, 1));
        let g = Polynomial::from_term(z(), Monomial::var_pow(Variable::U(1), 3), 1);
        let res = f.divide_with_remainder(std::slice::from_ref(&g), &ord).unwrap();
        assert_eq!(res.remainder, f);
        assert!(res.quotients[0].is_zero());
        // a product of divisors reduces to zero
        let h = g.mul(&det2());
        let res = h
            .divide_with_remainder(&[g.clone(), det2()], &ord)
            .unwrap();
        assert!(res.remainder.is_zero());
    }

    #[test]
    fn division_reduction_step() {
        // u1^3 reduced by u1^3 - 3 u1 - s1 leaves 3 u1 + xi_1_1 + xi_2_2
        let ord = MonomialOrder::presentation_block(2);
        let s1 = xi(1, 1).add(&xi(2, 2));
        let gen = Polynomial::from_term(z(), Monomial::var_pow(Variable::U(1), 3), 1)
            .sub(&uv(1).scale(&BigInt::from(3)))
            .sub(&s1);
        let f = Polynomial::from_term(z(), Monomial::var_pow(Variable::U(1), 3), 1);
        let res = f.divide_with_remainder(std::slice::from_ref(&gen), &ord).unwrap();
        let expect = uv(1).scale(&BigInt::from(3)).add(&s1);
        assert_eq!(res.remainder, expect);
        // reconstruction identity
        let back = res.quotients[0].mul(&gen).add(&res.remainder);
        assert_eq!(back, f);
    }

    #[test]
    fn division_rejects_non_unit_lead_over_z() {
        let ord = MonomialOrder::degrevlex_u(1);
        let g = uv(1).scale(&BigInt::from(2));
        assert!(matches!(
            uv(1).divide_with_remainder(&[g], &ord),
            Err(Error::NonUnitLeadingCoefficient(_))
        ));
    }

    #[test]
    fn s_polynomial_examples() {
        let ord = MonomialOrder::degrevlex_u(2);
        let f = uv(1).mul(&uv(1)).sub(&Polynomial::one(z()));
        let g = uv(1).mul(&uv(2)).sub(&Polynomial::one(z()));
        let s = f.s_polynomial(&g, &ord).unwrap();
        assert_eq!(s, uv(1).sub(&uv(2)));
        assert!(f.s_polynomial(&f, &ord).unwrap().is_zero());
        // coprime leading monomials: S-poly reduces to 0 modulo the pair
        let a = uv(1).mul(&uv(1)).sub(&uv(2));
        let b = Polynomial::from_term(z(), Monomial::var_pow(Variable::U(2), 3), 1)
            .add(&Polynomial::one(z()));
        let s = a.s_polynomial(&b, &ord).unwrap();
        let rem = s.reduce(&[a, b], &ord).unwrap();
        assert!(rem.is_zero());
    }

    #[test]
    fn map_coefficients_examples() {
        // u1^3 - 3 u1 mod 3 = u1^3
        let f = Polynomial::from_term(z(), Monomial::var_pow(Variable::U(1), 3), 1)
            .sub(&uv(1).scale(&BigInt::from(3)));
        let fp = f.map_coefficients(Domain::Prime(3)).unwrap();
        assert_eq!(
            fp,
            Polynomial::from_term(Domain::Prime(3), Monomial::var_pow(Variable::U(1), 3), 1)
        );
        // everything divisible by p collapses to zero
        let g = uv(1).scale(&BigInt::from(6)).add(&Polynomial::constant(z(), 9));
        assert!(g.map_coefficients(Domain::Prime(3)).unwrap().is_zero());
        // wrong direction
        assert!(matches!(
            fp.map_coefficients(Domain::Integer),
            Err(Error::UnsupportedCoefficientMap)
        ));
    }

    #[test]
    fn exact_division() {
        let f = det2().mul(&det2()).mul(&uv(1));
        let q = f.exact_div(&det2()).unwrap();
        assert_eq!(q, det2().mul(&uv(1)));
        assert!(uv(1).exact_div(&det2()).is_err());
    }

    #[test]
    fn render_format() {
        let ord = MonomialOrder::presentation_block(2);
        let f = Polynomial::from_term(z(), Monomial::var_pow(Variable::U(1), 3), 1)
            .sub(&uv(1).scale(&BigInt::from(3)));
        assert_eq!(f.render(&ord), "u_1^3 - 3*u_1");
        assert_eq!(xi(2, 1).render(&ord), "xi_2_1");
        let s1 = xi(1, 1).add(&xi(2, 2));
        assert_eq!(s1.render(&MonomialOrder::lex_xi(2)), "xi_2_2 + xi_1_1");
        assert_eq!(Polynomial::zero(z()).render(&ord), "0");
        let g = det2().sub(&Polynomial::one(z()));
        assert_eq!(
            g.render(&MonomialOrder::lex_xi(2)),
            "xi_1_1*xi_2_2 - xi_1_2*xi_2_1 - 1"
        );
    }
}
