//! Suite orchestration: configuration validation, the fixed check
//! schedule, concurrent execution with deterministic aggregation, and the
//! polynomial inspection command.

use crate::error::{Error, Result};
use crate::invariants::{
    compute_d, invariant_s, principal_minor, vector_equation_residual, build_m,
    verify_companion_certificates, verify_corner_minor_certificate, verify_leading_terms,
    verify_semi_invariant_certificate, CompanionSpec, DMethod,
};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::presentation::{
    build_generators, buchberger_check, check_leading_monomials, closure_check, coprime_lt_check,
    restricted_basis_check, PresentationSpec, PresentationVariant,
};
use crate::report::{CheckRecord, VerificationReport};
use crate::symfun::{
    check_f_mod_p, check_f_properties, check_x_side_properties, compute_big_f, compute_f,
    elementary_sigma, raise_x_powers, sigma_substitution, SymFunTask,
};
use crate::variable::Variable;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::path::PathBuf;

/// The selectable check families, in their fixed schedule order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Invariants,
    LeadingTerms,
    Jacobian,
    Symfun,
    Groebner,
    Closure,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Invariants,
        CheckKind::LeadingTerms,
        CheckKind::Jacobian,
        CheckKind::Symfun,
        CheckKind::Groebner,
        CheckKind::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Invariants => "invariants",
            CheckKind::LeadingTerms => "leading_terms",
            CheckKind::Jacobian => "jacobian",
            CheckKind::Symfun => "symfun",
            CheckKind::Groebner => "groebner",
            CheckKind::Closure => "closure",
        }
    }
}

/// Parse a comma-separated check list; `all` expands to every family.
pub fn parse_checks(spec: &str) -> Result<Vec<CheckKind>> {
    let mut out = Vec::new();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "all" => out.extend(CheckKind::ALL),
            "invariants" => out.push(CheckKind::Invariants),
            "leading_terms" => out.push(CheckKind::LeadingTerms),
            "jacobian" => out.push(CheckKind::Jacobian),
            "symfun" => out.push(CheckKind::Symfun),
            "groebner" => out.push(CheckKind::Groebner),
            "closure" => out.push(CheckKind::Closure),
            other => {
                return Err(Error::InvalidConfig(format!(
                    "unknown check '{other}'; expected invariants, leading_terms, jacobian, symfun, groebner, closure, or all"
                )))
            }
        }
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::InvalidConfig("empty check list".into()));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: u8,
    pub l: u32,
    pub p: Option<u64>,
    pub checks: Vec<CheckKind>,
    pub seed: u64,
    pub workers: Option<usize>,
    pub output_path: Option<PathBuf>,
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut k = 3u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

fn is_power_of(mut l: u64, p: u64) -> bool {
    if l < p {
        return false;
    }
    while l.is_multiple_of(p) {
        l /= p;
    }
    l == 1
}

impl SuiteConfig {
    /// Reject invalid parameters before any computation, naming the
    /// violated constraint.
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || self.n > 5 {
            return Err(Error::InvalidConfig(format!("n must be in 2..=5, got {}", self.n)));
        }
        if self.l < 3 || self.l.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!("l must be odd and > 1, got {}", self.l)));
        }
        let symbolic = [CheckKind::Symfun, CheckKind::Groebner, CheckKind::Closure];
        if self.n > 4 && self.checks.iter().any(|c| symbolic.contains(c)) {
            return Err(Error::InvalidConfig(format!(
                "symfun/groebner/closure checks require n <= 4 (cost grows combinatorially), got n = {}",
                self.n
            )));
        }
        if let Some(p) = self.p {
            if !is_odd_prime(p) {
                return Err(Error::InvalidConfig(format!("p must be an odd prime, got {p}")));
            }
            if self.checks.contains(&CheckKind::Symfun) && !is_power_of(self.l as u64, p) {
                return Err(Error::InvalidConfig(format!(
                    "mod-p check requires l to be a power of p, got l = {}, p = {p}",
                    self.l
                )));
            }
        }
        Ok(())
    }

    fn echo(&self) -> Vec<(String, String)> {
        vec![
            ("n".into(), self.n.to_string()),
            ("l".into(), self.l.to_string()),
            (
                "p".into(),
                self.p.map_or_else(|| "none".into(), |p| p.to_string()),
            ),
            (
                "checks".into(),
                self.checks.iter().map(|c| c.name()).collect::<Vec<_>>().join(","),
            ),
            ("seed".into(), self.seed.to_string()),
        ]
    }
}

fn has_column(poly: &Polynomial, col: u8) -> bool {
    poly.variables()
        .iter()
        .any(|v| matches!(v, Variable::Xi { col: c, .. } if *c == col))
}

/// The residual M*c - s vanishes on column-n variables, and the two
/// routes to d agree.
fn check_vector_equation(n: u8) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("vector_equation_n{n}"),
        "components of M*c - s contain no column-n variable; det(M) equals the permutation sum",
    );
    let residual = vector_equation_residual(n)?;
    for (idx, r) in residual.iter().enumerate() {
        rec.assert_that(
            format!("residual component {} avoids column n", idx + 1),
            !has_column(r, n),
            format!("{} terms", r.num_terms()),
        );
    }
    let d_det = compute_d(n, DMethod::Determinant)?;
    let d_perm = compute_d(n, DMethod::PermutationSum)?;
    rec.assert_that(
        "determinant and permutation-sum forms of d agree",
        d_det == d_perm,
        format!("{} terms", d_det.num_terms()),
    );
    Ok(rec)
}

/// Seeded random companion vectors; every certificate identity must hold.
fn check_companion_random(n: u8, seed: u64, count: usize) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("companion_random_n{n}"),
        "d(x_a) = 1, Delta_{n-1}(x_a) = 0, det(x_a) = 1, s_i(x_a) = (-1)^(i+1) a_i",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    for _ in 0..count {
        let mut a: Vec<i64> = (0..n as usize - 1).map(|_| rng.gen_range(-9..=9)).collect();
        a.push(if n % 2 == 1 { 1 } else { -1 });
        let inner = verify_companion_certificates(&CompanionSpec::new(a))?;
        if !inner.passed() {
            failures += 1;
        }
    }
    rec.assert_that(
        format!("{count} random companion vectors verify"),
        failures == 0,
        format!("failures = {failures}, seed = {seed}"),
    );
    Ok(rec)
}

fn check_substitution_oracle(n: u8, l: u32) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("substitution_oracle_n{n}_l{l}"),
        "F_i(sigma_1, .., sigma_n) = sigma_i(x^l) exactly",
    );
    let map = sigma_substitution(n)?;
    for i in 1..n {
        let big_f = compute_big_f(&SymFunTask::new(n, l, i)?)?;
        let lhs = big_f.substitute(&map)?;
        let rhs = raise_x_powers(&elementary_sigma(n, i)?, l);
        rec.assert_that(
            format!("oracle identity holds for i = {i}"),
            lhs == rhs,
            format!("{} terms", rhs.num_terms()),
        );
    }
    Ok(rec)
}

type Job = Box<dyn Fn() -> Result<CheckRecord> + Send + Sync>;

fn schedule(config: &SuiteConfig) -> Vec<Job> {
    let (n, l, p, seed) = (config.n, config.l, config.p, config.seed);
    let mut jobs: Vec<Job> = Vec::new();
    for kind in &config.checks {
        match kind {
            CheckKind::Invariants => {
                jobs.push(Box::new(move || check_vector_equation(n)));
                jobs.push(Box::new(move || check_companion_random(n, seed, 25)));
            }
            CheckKind::LeadingTerms => {
                jobs.push(Box::new(move || verify_leading_terms(n)));
            }
            CheckKind::Jacobian => {
                jobs.push(Box::new(move || verify_corner_minor_certificate(n)));
                if n >= 3 {
                    jobs.push(Box::new(move || verify_semi_invariant_certificate(n)));
                }
            }
            CheckKind::Symfun => {
                jobs.push(Box::new(move || check_substitution_oracle(n, l)));
                for i in 1..n {
                    jobs.push(Box::new(move || {
                        check_f_properties(&SymFunTask::new(n, l, i)?)
                    }));
                    jobs.push(Box::new(move || check_x_side_properties(n, l, i)));
                    if let Some(p) = p {
                        jobs.push(Box::new(move || {
                            check_f_mod_p(&SymFunTask::new(n, l, i)?, p)
                        }));
                    }
                }
            }
            CheckKind::Groebner => {
                for variant in [PresentationVariant::Full, PresentationVariant::QuotientByD] {
                    jobs.push(Box::new(move || {
                        let spec = PresentationSpec::new(n, l, variant, n - 1)?;
                        let gens = build_generators(&spec)?;
                        check_leading_monomials(&spec, &gens)
                    }));
                    jobs.push(Box::new(move || {
                        let spec = PresentationSpec::new(n, l, variant, n - 1)?;
                        let gens = build_generators(&spec)?;
                        coprime_lt_check(
                            format!("coprime_lt_n{n}_l{l}_{variant:?}"),
                            &gens,
                        )
                    }));
                    jobs.push(Box::new(move || {
                        let spec = PresentationSpec::new(n, l, variant, n - 1)?;
                        let gens = build_generators(&spec)?;
                        buchberger_check(
                            format!("buchberger_n{n}_l{l}_{variant:?}"),
                            &gens,
                        )
                    }));
                    jobs.push(Box::new(move || {
                        let spec = PresentationSpec::new(n, l, variant, n - 1)?;
                        let gens = build_generators(&spec)?;
                        restricted_basis_check(&spec, &gens)
                    }));
                }
            }
            CheckKind::Closure => {
                jobs.push(Box::new(move || {
                    let spec =
                        PresentationSpec::new(n, l, PresentationVariant::QuotientByD, n - 1)?;
                    let gens = build_generators(&spec)?;
                    closure_check(&spec, &gens, seed, 200)
                }));
            }
        }
    }
    jobs
}

/// Run the configured checks concurrently and aggregate the records in
/// schedule order so the report is deterministic.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    config.validate()?;
    let jobs = schedule(config);
    let run = || -> Result<Vec<CheckRecord>> { jobs.par_iter().map(|job| job()).collect() };
    let checks = match config.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidConfig(format!("worker pool: {e}")))?;
            pool.install(run)?
        }
        None => run()?,
    };
    Ok(VerificationReport {
        config: config.echo(),
        checks,
    })
}

/// Render a named expression with its leading term. `k` selects the index
/// for `s`, `delta`, `f`, and `F`; `l` is required for `f` and `F`.
pub fn show(expr: &str, n: u8, l: Option<u32>, k: Option<u8>) -> Result<String> {
    if !(2..=5).contains(&n) {
        return Err(Error::InvalidConfig(format!("n must be in 2..=5, got {n}")));
    }
    let need_k = || {
        k.ok_or_else(|| Error::InvalidConfig(format!("--k is required for --expr {expr}")))
    };
    let need_l = || {
        l.ok_or_else(|| Error::InvalidConfig(format!("--l is required for --expr {expr}")))
    };
    let render_with_lt = |p: &Polynomial, ord: &MonomialOrder| -> Result<String> {
        let (lm, lc) = p.leading_term(ord)?;
        let lt = Polynomial::from_term(p.domain(), lm, lc);
        Ok(format!("{}\nLT: {}", p.render(ord), lt.render(ord)))
    };
    match expr {
        "s" => render_with_lt(&invariant_s(n, need_k()?)?, &MonomialOrder::lex_xi(n)),
        "delta" => render_with_lt(&principal_minor(n, need_k()?)?, &MonomialOrder::lex_xi(n)),
        "d" => render_with_lt(
            &compute_d(n, DMethod::Determinant)?,
            &MonomialOrder::lex_xi(n),
        ),
        "f" => render_with_lt(
            &compute_f(&SymFunTask::new(n, need_l()?, need_k()?)?)?,
            &MonomialOrder::degrevlex_u(n - 1),
        ),
        "F" => render_with_lt(
            &compute_big_f(&SymFunTask::new(n, need_l()?, need_k()?)?)?,
            &MonomialOrder::degrevlex_u(n),
        ),
        "M" => {
            let m = build_m(n)?;
            let ord = MonomialOrder::lex_xi(n);
            let mut out = String::new();
            for i in 0..n as usize {
                for j in 0..n as usize {
                    out.push_str(&format!("M {} {} {}\n", i + 1, j + 1, m.entry(i, j).render(&ord)));
                }
            }
            out.pop();
            Ok(out)
        }
        other => Err(Error::InvalidConfig(format!(
            "unknown expression '{other}'; expected s, delta, d, f, F, or M"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> SuiteConfig {
        SuiteConfig {
            n: 2,
            l: 3,
            p: None,
            checks: CheckKind::ALL.to_vec(),
            seed: 7,
            workers: None,
            output_path: None,
        }
    }

    #[test]
    fn parse_check_lists() {
        assert_eq!(parse_checks("all").unwrap(), CheckKind::ALL.to_vec());
        assert_eq!(
            parse_checks("jacobian,invariants").unwrap(),
            vec![CheckKind::Invariants, CheckKind::Jacobian]
        );
        assert!(parse_checks("bogus").is_err());
        assert!(parse_checks("").is_err());
    }

    #[test]
    fn validation_rejects_bad_configs() {
        let mut c = base_config();
        c.n = 1;
        assert!(c.validate().is_err());
        let mut c = base_config();
        c.l = 4;
        assert!(c.validate().is_err());
        let mut c = base_config();
        c.p = Some(9);
        assert!(c.validate().is_err());
        let mut c = base_config();
        c.l = 9;
        c.p = Some(5);
        assert!(matches!(c.validate(), Err(Error::InvalidConfig(_))));
        let mut c = base_config();
        c.n = 5;
        assert!(c.validate().is_err());
        c.checks = vec![CheckKind::Invariants, CheckKind::Jacobian];
        assert!(c.validate().is_ok());
    }

    #[test]
    fn full_suite_n2_passes() {
        let mut c = base_config();
        c.p = Some(3);
        let report = run_suite(&c).unwrap();
        assert!(report.passed(), "\n{}", report.render());
    }

    #[test]
    fn suite_is_deterministic_across_worker_counts() {
        let mut c = base_config();
        c.checks = vec![CheckKind::Invariants, CheckKind::LeadingTerms, CheckKind::Jacobian];
        let a = run_suite(&c).unwrap().render();
        c.workers = Some(1);
        let b = run_suite(&c).unwrap().render();
        c.workers = Some(4);
        let d = run_suite(&c).unwrap().render();
        assert_eq!(a, b);
        assert_eq!(a, d);
    }

    #[test]
    fn show_examples() {
        assert_eq!(show("d", 2, None, None).unwrap(), "xi_2_1\nLT: xi_2_1");
        assert_eq!(
            show("f", 2, Some(3), Some(1)).unwrap(),
            "u_1^3 - 3*u_1\nLT: u_1^3"
        );
        assert_eq!(
            show("s", 2, None, Some(1)).unwrap(),
            "xi_2_2 + xi_1_1\nLT: xi_2_2"
        );
        let m = show("M", 2, None, None).unwrap();
        assert!(m.contains("M 1 2 1"));
        assert!(show("q", 2, None, None).is_err());
        assert!(show("s", 2, None, None).is_err());
        assert!(show("f", 2, None, Some(1)).is_err());
    }
}
