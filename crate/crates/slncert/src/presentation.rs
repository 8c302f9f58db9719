//! Presentations of the invariant subalgebras: generator sets in the mixed
//! ring Z[xi, u, z], verification that they form a Groebner basis under the
//! block elimination order z > u > xi, and the restricted monomial bases of
//! the resulting quotients.

use crate::error::{Error, Result};
use crate::invariants::{compute_d, invariant_s, principal_minor, DMethod};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Domain, Polynomial};
use crate::report::CheckRecord;
use crate::symfun::{compute_f, SymFunTask};
use crate::variable::Variable;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Which quotient the generator set presents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationVariant {
    /// Generators det - 1, f_i - s_i, z_i^2 - Delta_i.
    Full,
    /// Additionally quotients by the semi-invariant d.
    QuotientByD,
}

/// Parameters of a presentation: matrix size `n`, odd exponent `l`, and
/// the number `t` of square-root variables `z_1..z_t` (t <= n-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PresentationSpec {
    pub n: u8,
    pub l: u32,
    pub variant: PresentationVariant,
    pub t: u8,
}

impl PresentationSpec {
    pub fn new(n: u8, l: u32, variant: PresentationVariant, t: u8) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConfig(format!("n must be >= 2, got {n}")));
        }
        if l < 2 || l.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!("l must be odd and > 1, got {l}")));
        }
        if t > n - 1 {
            return Err(Error::IndexOutOfRange {
                index: t.to_string(),
                expected: format!("0..={}", n - 1),
            });
        }
        Ok(PresentationSpec { n, l, variant, t })
    }
}

/// A generator list together with the elimination order used to reduce
/// against it.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl GeneratorSet {
    /// Leading monomials of all generators, in generator order.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        self.generators
            .iter()
            .map(|g| Ok(g.leading_term(&self.order)?.0))
            .collect()
    }

    /// Remainder of `p` on division by the generators.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(p.divide_with_remainder(&self.generators, &self.order)?.remainder)
    }
}

/// The generator set for `spec`: det - 1, optionally d, then f_i - s_i for
/// i = 1..n-1, then z_i^2 - Delta_i for i = 1..t.
pub fn build_generators(spec: &PresentationSpec) -> Result<GeneratorSet> {
    let n = spec.n;
    let mut generators = Vec::new();
    let det = invariant_s(n, n)?;
    generators.push(det.sub(&Polynomial::one(Domain::Integer)));
    if spec.variant == PresentationVariant::QuotientByD {
        generators.push(compute_d(n, DMethod::Determinant)?);
    }
    for i in 1..n {
        let f = compute_f(&SymFunTask::new(n, spec.l, i)?)?;
        generators.push(f.sub(&invariant_s(n, i)?));
    }
    for i in 1..=spec.t {
        let z2 = Polynomial::variable(Domain::Integer, Variable::Z(i)).pow(2);
        generators.push(z2.sub(&principal_minor(n, i)?));
    }
    Ok(GeneratorSet {
        generators,
        order: MonomialOrder::presentation_block(n),
    })
}

/// The leading monomials the generator set must have: the xi-diagonal
/// product for det - 1, the xi-subdiagonal power product for d, u_i^l for
/// f_i - s_i, and z_i^2 for z_i^2 - Delta_i.
pub fn expected_leading_monomials(spec: &PresentationSpec) -> Vec<Monomial> {
    let n = spec.n;
    let mut out = Vec::new();
    out.push(Monomial::from_pairs((1..=n).map(|i| (Variable::xi(i, i), 1))));
    if spec.variant == PresentationVariant::QuotientByD {
        out.push(Monomial::from_pairs(
            (2..=n).map(|i| (Variable::xi(i, i - 1), (i - 1) as u32)),
        ));
    }
    for i in 1..n {
        out.push(Monomial::var_pow(Variable::U(i), spec.l));
    }
    for i in 1..=spec.t {
        out.push(Monomial::var_pow(Variable::Z(i), 2));
    }
    out
}

/// Leading monomials are as expected and have unit coefficients.
pub fn check_leading_monomials(spec: &PresentationSpec, gens: &GeneratorSet) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("presentation_lt_n{}_l{}_t{}_{:?}", spec.n, spec.l, spec.t, spec.variant),
        "generator leading monomials under the z > u > xi block order",
    );
    let expected = expected_leading_monomials(spec);
    for (g, want) in gens.generators.iter().zip(&expected) {
        let (lm, lc) = g.leading_term(&gens.order)?;
        rec.assert_that(
            format!("LT matches {want}"),
            lm == *want,
            format!("LT = {lc}*{lm}"),
        );
        rec.assert_that(
            format!("unit leading coefficient at {want}"),
            lc.magnitude().is_one(),
            format!("coeff = {lc}"),
        );
    }
    Ok(rec)
}

/// Pairwise coprimality of the leading monomials: lcm(LT_i, LT_j) equals
/// the product for every pair.
pub fn coprime_lt_check(id: impl Into<String>, gens: &GeneratorSet) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(id, "pairwise coprime leading monomials");
    let lms = gens.leading_monomials()?;
    for i in 0..lms.len() {
        for j in i + 1..lms.len() {
            let lcm = lms[i].lcm(&lms[j]);
            rec.assert_that(
                format!("lcm({}, {}) = product", lms[i], lms[j]),
                lcm == lms[i].mul(&lms[j]),
                format!("lcm = {lcm}"),
            );
        }
    }
    Ok(rec)
}

/// Buchberger criterion by direct computation: every S-polynomial of a
/// pair of generators reduces to zero on division by the full list.
pub fn buchberger_check(id: impl Into<String>, gens: &GeneratorSet) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(id, "all S-polynomials reduce to zero");
    let k = gens.generators.len();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((i, j));
        }
    }
    let results: Vec<Result<(usize, usize, bool, usize)>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let s = gens.generators[i].s_polynomial(&gens.generators[j], &gens.order)?;
            let nf = gens.normal_form(&s)?;
            Ok((i, j, nf.is_zero(), nf.num_terms()))
        })
        .collect();
    for r in results {
        let (i, j, ok, leftover) = r?;
        rec.assert_that(
            format!("S(g_{i}, g_{j}) reduces to 0"),
            ok,
            format!("remainder has {leftover} terms"),
        );
    }
    Ok(rec)
}

/// The monomials `u^a * z^b` with every u-exponent < l and every
/// z-exponent < 2, enumerated in a fixed order. Their count is
/// l^(n-1) * 2^t.
pub fn restricted_monomials(spec: &PresentationSpec) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for i in 1..spec.n {
        let mut next = Vec::with_capacity(out.len() * spec.l as usize);
        for m in &out {
            for e in 0..spec.l {
                next.push(m.mul(&Monomial::var_pow(Variable::U(i), e)));
            }
        }
        out = next;
    }
    for i in 1..=spec.t {
        let mut next = Vec::with_capacity(out.len() * 2);
        for m in &out {
            for e in 0..2 {
                next.push(m.mul(&Monomial::var_pow(Variable::Z(i), e)));
            }
        }
        out = next;
    }
    out
}

/// No restricted monomial is divisible by a generator leading monomial,
/// and the count is l^(n-1) * 2^t.
pub fn restricted_basis_check(spec: &PresentationSpec, gens: &GeneratorSet) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!(
            "restricted_basis_n{}_l{}_t{}_{:?}",
            spec.n, spec.l, spec.t, spec.variant
        ),
        "monomials with u-exponents < l and z-exponents < 2 avoid all leading monomials",
    );
    let basis = restricted_monomials(spec);
    let expect = (spec.l as u128).pow(spec.n as u32 - 1) * 2u128.pow(spec.t as u32);
    rec.assert_that(
        "basis count is l^(n-1) * 2^t",
        basis.len() as u128 == expect,
        format!("count = {}", basis.len()),
    );
    let lms = gens.leading_monomials()?;
    let reducible = basis
        .iter()
        .filter(|m| lms.iter().any(|lm| lm.divides(m)))
        .count();
    rec.assert_that(
        "no basis monomial is divisible by a leading monomial",
        reducible == 0,
        format!("{reducible} reducible monomials"),
    );
    Ok(rec)
}

fn is_restricted_u_term(m: &Monomial, spec: &PresentationSpec) -> bool {
    m.iter().all(|(v, e)| match v {
        Variable::Z(_) => false,
        Variable::U(_) => e < spec.l,
        _ => true,
    })
}

/// Closure of the restricted u-span under multiplication: the normal form
/// of a product of two u-monomials with exponents < l again has all
/// u-exponents < l and is free of z variables. Exhaustive over all pairs
/// when l^(2(n-1)) <= 10^4, otherwise a seeded sample.
pub fn closure_check(
    spec: &PresentationSpec,
    gens: &GeneratorSet,
    seed: u64,
    samples: usize,
) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!(
            "closure_n{}_l{}_t{}_{:?}",
            spec.n, spec.l, spec.t, spec.variant
        ),
        "products of restricted u-monomials reduce into the restricted u-span",
    );
    let u_only = PresentationSpec { t: 0, ..*spec };
    let u_basis = restricted_monomials(&u_only);
    let total_pairs = (u_basis.len() as u128).pow(2);
    let pairs: Vec<(usize, usize)> = if total_pairs <= 10_000 {
        (0..u_basis.len())
            .flat_map(|i| (0..u_basis.len()).map(move |j| (i, j)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| (rng.gen_range(0..u_basis.len()), rng.gen_range(0..u_basis.len())))
            .collect()
    };
    rec.assert_that(
        "pair set is nonempty",
        !pairs.is_empty(),
        format!("{} pairs (of {total_pairs} possible)", pairs.len()),
    );
    let results: Vec<Result<(usize, usize, bool)>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let product = Polynomial::from_term(Domain::Integer, u_basis[i].mul(&u_basis[j]), 1);
            let nf = gens.normal_form(&product)?;
            let ok = nf.monomials().all(|m| is_restricted_u_term(m, spec));
            Ok((i, j, ok))
        })
        .collect();
    let mut bad = Vec::new();
    for r in results {
        let (i, j, ok) = r?;
        if !ok {
            bad.push(format!("{} * {}", u_basis[i], u_basis[j]));
        }
    }
    rec.assert_that(
        "all sampled products stay in the restricted u-span",
        bad.is_empty(),
        if bad.is_empty() {
            "all normal forms restricted".to_string()
        } else {
            format!("violations: {}", bad.join(", "))
        },
    );
    Ok(rec)
}
