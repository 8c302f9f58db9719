//! Invariant-theoretic objects on `Mat_n`: the coefficients `s_k` of the
//! characteristic polynomial (traces of exterior powers, equivalently sums
//! of principal k-minors), the corner principal minors `Delta_k`, the
//! matrix `M` of partial derivatives of the `s_k` with respect to the last
//! column, its determinant `d`, companion matrices, Jacobians and their
//! minors, and the integer-matrix certificates built from them.

use crate::error::{Error, Result};
use crate::matrix::{int_determinant, PolyMatrix};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Domain, Polynomial};
use crate::report::CheckRecord;
use crate::variable::Variable;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// The generic matrix whose (i, j) entry is the variable `xi_i_j`.
#[derive(Clone, Debug)]
pub struct GenericMatrix {
    n: u8,
    entries: PolyMatrix,
}

impl GenericMatrix {
    pub fn new(n: u8) -> Self {
        let entries = PolyMatrix::from_fn(n as usize, n as usize, |i, j| {
            Polynomial::variable(Domain::Integer, Variable::xi(i as u8 + 1, j as u8 + 1))
        });
        GenericMatrix { n, entries }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.entries
    }
}

/// Coefficient data for a companion matrix with characteristic polynomial
/// `x^n - a_1 x^{n-1} - ... - a_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionSpec {
    pub a: Vec<BigInt>,
}

impl CompanionSpec {
    pub fn new(a: impl IntoIterator<Item = impl Into<BigInt>>) -> Self {
        CompanionSpec {
            a: a.into_iter().map(Into::into).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

fn check_index(k: u8, lo: u8, hi: u8) -> Result<()> {
    if (lo..=hi).contains(&k) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: k.to_string(),
            expected: format!("{lo}..={hi}"),
        })
    }
}

/// `s_k` as the sum over all k-subsets `L` of the principal minor
/// `det(X_{L,L})` of the generic matrix.
pub fn invariant_s(n: u8, k: u8) -> Result<Polynomial> {
    check_index(k, 1, n)?;
    let x = GenericMatrix::new(n);
    let mut acc = Polynomial::zero(Domain::Integer);
    for subset in (0..n as usize).combinations(k as usize) {
        let minor = x
            .matrix()
            .submatrix(&subset, &subset)
            .determinant_permutation()?;
        acc = acc.add(&minor);
    }
    Ok(acc)
}

/// Determinant of the top-left k-by-k corner of the generic matrix.
pub fn principal_minor(n: u8, k: u8) -> Result<Polynomial> {
    check_index(k, 1, n.saturating_sub(1))?;
    let x = GenericMatrix::new(n);
    let idx: Vec<usize> = (0..k as usize).collect();
    x.matrix().submatrix(&idx, &idx).determinant_permutation()
}

/// The n-by-n matrix whose (k, i) entry is the partial derivative of
/// `s_k` with respect to `xi_i_n`. Every entry is free of the column-n
/// variables.
pub fn build_m(n: u8) -> Result<PolyMatrix> {
    let s: Vec<Polynomial> = (1..=n).map(|k| invariant_s(n, k)).collect::<Result<_>>()?;
    Ok(PolyMatrix::from_fn(n as usize, n as usize, |k, i| {
        s[k].partial_derivative(Variable::xi(i as u8 + 1, n))
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DMethod {
    /// Fraction-free elimination on `M`.
    Determinant,
    /// Direct expansion of the signed sum over permutations of products
    /// of the derivatives.
    PermutationSum,
}

/// The semi-invariant `d = det(M)`.
pub fn compute_d(n: u8, method: DMethod) -> Result<Polynomial> {
    let m = build_m(n)?;
    match method {
        DMethod::Determinant => m.determinant(),
        DMethod::PermutationSum => m.determinant_permutation(),
    }
}

/// The companion matrix: subdiagonal ones, last column `a_n, .., a_1`
/// top to bottom.
pub fn companion_matrix(spec: &CompanionSpec) -> Vec<Vec<BigInt>> {
    let n = spec.n();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 1..n {
        m[i][i - 1] = BigInt::one();
    }
    for (row, a) in m.iter_mut().zip(spec.a.iter().rev()) {
        row[n - 1] = a.clone();
    }
    m
}

/// Total assignment sending `xi_i_j` to the (i, j) entry of an integer
/// matrix.
pub fn matrix_point(m: &[Vec<BigInt>]) -> BTreeMap<Variable, BigInt> {
    let mut point = BTreeMap::new();
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            point.insert(Variable::xi(i as u8 + 1, j as u8 + 1), v.clone());
        }
    }
    point
}

/// The residual `r = M c - s`, where `c` is the last column of the
/// generic matrix and `s = (s_1, .., s_n)`. Every component is free of
/// the column-n variables.
pub fn vector_equation_residual(n: u8) -> Result<Vec<Polynomial>> {
    let m = build_m(n)?;
    let c: Vec<Polynomial> = (1..=n)
        .map(|i| Polynomial::variable(Domain::Integer, Variable::xi(i, n)))
        .collect();
    let mc = m.apply(&c);
    (1..=n)
        .map(|k| Ok(mc[k as usize - 1].sub(&invariant_s(n, k)?)))
        .collect()
}

/// Jacobian matrix: entry (i, j) is the derivative of the i-th function
/// with respect to the j-th variable.
pub fn jacobian(functions: &[Polynomial], variables: &[Variable]) -> PolyMatrix {
    PolyMatrix::from_fn(functions.len(), variables.len(), |i, j| {
        functions[i].partial_derivative(variables[j])
    })
}

/// Determinant of the selected submatrix, with the entries evaluated at
/// the point first and the determinant taken over the integers.
pub fn minor_at(
    matrix: &PolyMatrix,
    rows: &[usize],
    cols: &[usize],
    point: &BTreeMap<Variable, BigInt>,
) -> Result<BigInt> {
    if rows.len() != cols.len() {
        return Err(Error::RaggedMinor {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    let mut values = Vec::with_capacity(rows.len());
    for &i in rows {
        let mut row = Vec::with_capacity(cols.len());
        for &j in cols {
            row.push(matrix.entry(i, j).evaluate(point)?);
        }
        values.push(row);
    }
    Ok(int_determinant(&values))
}

/// Witness matrix for the corner-minor certificate: -1 at (1, n), 1 at
/// (n, 1), identity in between.
#[allow(clippy::needless_range_loop)] // diagonal assignment reads best with indices
pub fn antidiagonal_witness(n: u8) -> Vec<Vec<BigInt>> {
    let n = n as usize;
    let mut a = vec![vec![BigInt::zero(); n]; n];
    a[0][n - 1] = BigInt::from(-1);
    a[n - 1][0] = BigInt::one();
    for i in 1..n - 1 {
        a[i][i] = BigInt::one();
    }
    a
}

/// Certificate: there is an integer matrix of determinant 1 on which the
/// corner minor `Delta_{n-1}` vanishes while a 2x2 minor of the Jacobian
/// of `(det, Delta_{n-1})` is a unit.
pub fn verify_corner_minor_certificate(n: u8) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("jacobian_corner_certificate_n{n}"),
        "det(A)=1, Delta_{n-1}(A)=0, |minor of Jac(det, Delta_{n-1}) at A| = 1",
    );
    let a = antidiagonal_witness(n);
    let point = matrix_point(&a);
    let det_a = int_determinant(&a);
    rec.assert_that("det(A) = 1", det_a.is_one(), format!("det(A) = {det_a}"));
    let delta = principal_minor(n, n - 1)?;
    let delta_a = delta.evaluate(&point)?;
    rec.assert_that(
        "Delta_{n-1}(A) = 0",
        delta_a.is_zero(),
        format!("Delta_{{n-1}}(A) = {delta_a}"),
    );
    let det = invariant_s(n, n)?;
    let jac = jacobian(&[det, delta], &[Variable::xi(1, n), Variable::xi(1, 1)]);
    let minor = minor_at(&jac, &[0, 1], &[0, 1], &point)?;
    rec.assert_that(
        "|2x2 Jacobian minor at A| = 1",
        minor.abs().is_one(),
        format!("minor = {minor}"),
    );
    // the witness Jacobian block is diagonal with unit entries
    for (i, j) in [(0usize, 1usize), (1, 0)] {
        let off = jac.entry(i, j).evaluate(&point)?;
        rec.assert_that(
            format!("Jacobian block entry ({i},{j}) vanishes at A"),
            off.is_zero(),
            format!("entry = {off}"),
        );
    }
    Ok(rec)
}

/// The column-index tuple for the 2n-th order Jacobian minor:
/// `(1,1), (2,2), (2,3), .., (2,n-1), (n,n), (n-1,n), .., (2,n), (2,1), (1,2)`.
pub fn alpha_columns(n: u8) -> Vec<Variable> {
    let mut alpha = vec![Variable::xi(1, 1), Variable::xi(2, 2)];
    for j in 3..n {
        alpha.push(Variable::xi(2, j));
    }
    for i in (2..=n).rev() {
        alpha.push(Variable::xi(i, n));
    }
    alpha.push(Variable::xi(2, 1));
    alpha.push(Variable::xi(1, 2));
    alpha
}

/// Witness matrix for the semi-invariant certificate: ones on (1,1) and
/// (2,2), the pair (3,1), (3,2), the subdiagonal from row 4 down, and
/// `(-1)^n` in the top-right corner.
pub fn semi_invariant_witness(n: u8) -> Vec<Vec<BigInt>> {
    let n = n as usize;
    let mut a = vec![vec![BigInt::zero(); n]; n];
    a[0][0] = BigInt::one();
    a[0][n - 1] = if n.is_multiple_of(2) { BigInt::one() } else { BigInt::from(-1) };
    a[1][1] = BigInt::one();
    a[2][0] = BigInt::one();
    a[2][1] = BigInt::one();
    for i in 3..n {
        a[i][i - 1] = BigInt::one();
    }
    a
}

/// Certificate: there is an integer matrix of determinant 1 on which `d`
/// vanishes while the designated 2n-th order minor of the Jacobian of
/// `(s_1, .., s_n, d, Delta_1, .., Delta_{n-1})` is a unit, and the row
/// order `Delta_1, .., Delta_{n-1}, s_1, .., s_n, d` triangularizes it.
pub fn verify_semi_invariant_certificate(n: u8) -> Result<CheckRecord> {
    check_index(n, 3, u8::MAX)?;
    let mut rec = CheckRecord::new(
        format!("jacobian_semi_invariant_certificate_n{n}"),
        "det(A)=1, d(A)=0, |det(M_alpha(A))| = 1, triangular in the row order Delta_*, s_*, d",
    );
    let a = semi_invariant_witness(n);
    let point = matrix_point(&a);
    let det_a = int_determinant(&a);
    rec.assert_that("det(A) = 1", det_a.is_one(), format!("det(A) = {det_a}"));

    let d = compute_d(n, DMethod::Determinant)?;
    let d_a = d.evaluate(&point)?;
    rec.assert_that("d(A) = 0", d_a.is_zero(), format!("d(A) = {d_a}"));

    let d12 = d.partial_derivative(Variable::xi(1, 2)).evaluate(&point)?;
    rec.assert_that(
        "|d_{xi_1_2}(A)| = 1",
        d12.abs().is_one(),
        format!("d_{{xi_1_2}}(A) = {d12}"),
    );

    // rows: s_1..s_n, d, Delta_1..Delta_{n-1}; columns: alpha
    let mut functions: Vec<Polynomial> = (1..=n)
        .map(|k| invariant_s(n, k))
        .collect::<Result<_>>()?;
    functions.push(d);
    for k in 1..n {
        functions.push(principal_minor(n, k)?);
    }
    let alpha = alpha_columns(n);
    let jac = jacobian(&functions, &alpha);
    let all_rows: Vec<usize> = (0..2 * n as usize).collect();
    let all_cols: Vec<usize> = (0..2 * n as usize).collect();
    let minor = minor_at(&jac, &all_rows, &all_cols, &point)?;
    rec.assert_that(
        "|det(M_alpha(A))| = 1",
        minor.abs().is_one(),
        format!("det(M_alpha(A)) = {minor}"),
    );

    // triangularization: rows Delta_1..Delta_{n-1}, s_1..s_n, d
    let mut row_order: Vec<usize> = (n as usize + 1..2 * n as usize).collect();
    row_order.extend(0..n as usize);
    row_order.push(n as usize);
    let mut triangular = true;
    let mut diag_units = true;
    for (i, &r) in row_order.iter().enumerate() {
        for j in 0..2 * n as usize {
            let v = jac.entry(r, j).evaluate(&point)?;
            if j == i && !v.abs().is_one() {
                diag_units = false;
            }
            if j > i && !v.is_zero() {
                triangular = false;
            }
        }
    }
    rec.assert_that(
        "reordered M_alpha(A) is lower triangular",
        triangular,
        "entries above the diagonal vanish",
    );
    rec.assert_that(
        "diagonal entries are units",
        diag_units,
        "all diagonal entries are +-1",
    );
    Ok(rec)
}

/// Certificates at a companion matrix with `a_n = (-1)^{n-1}`:
/// `det(x_a) = 1`, `d(x_a) = 1`, `Delta_{n-1}(x_a) = 0` and
/// `s_i(x_a) = (-1)^{i+1} a_i`.
pub fn verify_companion_certificates(spec: &CompanionSpec) -> Result<CheckRecord> {
    let n = spec.n() as u8;
    let mut rec = CheckRecord::new(
        format!("companion_certificates_n{n}"),
        "d(x_a)=1, Delta_{n-1}(x_a)=0, det(x_a)=1, s_i(x_a)=(-1)^(i+1)*a_i",
    );
    let x = companion_matrix(spec);
    let point = matrix_point(&x);
    let det = int_determinant(&x);
    rec.assert_that("det(x_a) = 1", det.is_one(), format!("det = {det}"));
    // d(x_a) via evaluation of M before the determinant; the symbolic
    // polynomial d is far too large for repeated use at n = 5
    let m = build_m(n)?;
    let all: Vec<usize> = (0..n as usize).collect();
    let d_val = minor_at(&m, &all, &all, &point)?;
    rec.assert_that("d(x_a) = 1", d_val.is_one(), format!("d = {d_val}"));
    let delta = principal_minor(n, n - 1)?.evaluate(&point)?;
    rec.assert_that(
        "Delta_{n-1}(x_a) = 0",
        delta.is_zero(),
        format!("Delta = {delta}"),
    );
    for i in 1..=n {
        let s_val = invariant_s(n, i)?.evaluate(&point)?;
        let expect = if i % 2 == 1 {
            spec.a[i as usize - 1].clone()
        } else {
            -spec.a[i as usize - 1].clone()
        };
        rec.assert_that(
            format!("s_{i}(x_a) = (-1)^{}*a_{i}", i + 1),
            s_val == expect,
            format!("s_{i} = {s_val}, expected {expect}"),
        );
    }
    Ok(rec)
}

/// The expected leading monomial of `det` under the lex order:
/// `xi_n_n * .. * xi_1_1`.
pub fn expected_lt_det(n: u8) -> Monomial {
    Monomial::from_pairs((1..=n).map(|i| (Variable::xi(i, i), 1)))
}

/// The expected leading monomial of `d` under the lex order:
/// `xi_n_{n-1}^{n-1} * .. * xi_3_2^2 * xi_2_1`.
pub fn expected_lt_d(n: u8) -> Monomial {
    Monomial::from_pairs((2..=n).map(|i| (Variable::xi(i, i - 1), (i - 1) as u32)))
}

/// Leading-term certificate for `det` and `d` under the lex order on the
/// matrix variables.
pub fn verify_leading_terms(n: u8) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new(
        format!("leading_terms_n{n}"),
        "LT(det) = +-xi_n_n*..*xi_1_1 and LT(d) = +-xi_n_(n-1)^(n-1)*..*xi_2_1",
    );
    let ord = MonomialOrder::lex_xi(n);
    let det = invariant_s(n, n)?;
    let (m, c) = det.leading_term(&ord)?;
    rec.assert_that(
        "LT(det) monomial",
        m == expected_lt_det(n),
        format!("LT(det) = {c}*{m}"),
    );
    rec.assert_that("LT(det) unit coefficient", c.abs().is_one(), format!("coeff = {c}"));
    let d = compute_d(n, DMethod::Determinant)?;
    let (m, c) = d.leading_term(&ord)?;
    rec.assert_that(
        "LT(d) monomial",
        m == expected_lt_d(n),
        format!("LT(d) = {c}*{m}"),
    );
    rec.assert_that("LT(d) unit coefficient", c.abs().is_one(), format!("coeff = {c}"));
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Domain;

    fn xi(i: u8, j: u8) -> Polynomial {
        Polynomial::variable(Domain::Integer, Variable::xi(i, j))
    }

    #[test]
    fn s_of_small_matrices() {
        let s1 = invariant_s(2, 1).unwrap();
        assert_eq!(s1, xi(1, 1).add(&xi(2, 2)));
        let s2 = invariant_s(2, 2).unwrap();
        assert_eq!(s2, xi(1, 1).mul(&xi(2, 2)).sub(&xi(1, 2).mul(&xi(2, 1))));
        // n=3, k=2: the three principal 2x2 minors
        let s32 = invariant_s(3, 2).unwrap();
        let m12 = xi(1, 1).mul(&xi(2, 2)).sub(&xi(1, 2).mul(&xi(2, 1)));
        let m13 = xi(1, 1).mul(&xi(3, 3)).sub(&xi(1, 3).mul(&xi(3, 1)));
        let m23 = xi(2, 2).mul(&xi(3, 3)).sub(&xi(2, 3).mul(&xi(3, 2)));
        assert_eq!(s32, m12.add(&m13).add(&m23));
        assert!(invariant_s(3, 4).is_err());
    }

    #[test]
    fn principal_minors() {
        assert_eq!(principal_minor(3, 1).unwrap(), xi(1, 1));
        let d2 = principal_minor(3, 2).unwrap();
        assert_eq!(d2, xi(1, 1).mul(&xi(2, 2)).sub(&xi(1, 2).mul(&xi(2, 1))));
        assert!(principal_minor(3, 3).is_err());
        // at the identity matrix every corner minor is 1
        let id: Vec<Vec<BigInt>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let point = matrix_point(&id);
        for k in 1..4 {
            assert!(principal_minor(4, k).unwrap().evaluate(&point).unwrap().is_one());
        }
    }

    #[test]
    fn m_for_n2() {
        let m = build_m(2).unwrap();
        assert!(m.entry(0, 0).is_zero());
        assert_eq!(*m.entry(0, 1), Polynomial::one(Domain::Integer));
        assert_eq!(*m.entry(1, 0), xi(2, 1).neg());
        assert_eq!(*m.entry(1, 1), xi(1, 1));
    }

    #[test]
    fn m_entries_avoid_last_column() {
        for n in 2..=4u8 {
            let m = build_m(n).unwrap();
            // entry (1, n) is the trace derivative, identically 1
            assert_eq!(
                *m.entry(0, n as usize - 1),
                Polynomial::one(Domain::Integer)
            );
            for i in 0..n as usize {
                for j in 0..n as usize {
                    assert!(!m
                        .entry(i, j)
                        .contains_variable(|v| matches!(v, Variable::Xi { col, .. } if col == n)));
                }
            }
        }
    }

    #[test]
    fn d_for_n2_is_corner_variable() {
        let d = compute_d(2, DMethod::Determinant).unwrap();
        assert_eq!(d, xi(2, 1));
        assert_eq!(d, compute_d(2, DMethod::PermutationSum).unwrap());
    }

    #[test]
    fn d_methods_agree() {
        for n in 2..=4u8 {
            assert_eq!(
                compute_d(n, DMethod::Determinant).unwrap(),
                compute_d(n, DMethod::PermutationSum).unwrap()
            );
        }
    }

    #[test]
    fn residual_has_no_last_column_variable() {
        for n in 2..=3u8 {
            let r = vector_equation_residual(n).unwrap();
            for comp in &r {
                assert!(!comp
                    .contains_variable(|v| matches!(v, Variable::Xi { col, .. } if col == n)));
            }
        }
        // first component for n=2 is -xi_1_1
        let r = vector_equation_residual(2).unwrap();
        assert_eq!(r[0], xi(1, 1).neg());
    }

    #[test]
    fn companion_shape_and_certificates() {
        let spec = CompanionSpec::new([5i64, -3, 1]);
        let x = companion_matrix(&spec);
        // subdiagonal ones, last column a_3, a_2, a_1 top to bottom
        assert_eq!(x[1][0], BigInt::one());
        assert_eq!(x[2][1], BigInt::one());
        assert_eq!(x[0][2], BigInt::from(1));
        assert_eq!(x[1][2], BigInt::from(-3));
        assert_eq!(x[2][2], BigInt::from(5));
        // a_n = (-1)^(n-1) puts x_a in SL_n
        let rec = verify_companion_certificates(&spec).unwrap();
        assert!(rec.passed(), "{:?}", rec.failures().collect::<Vec<_>>());
    }

    #[test]
    fn characteristic_polynomial_identity() {
        // det(x id - X) = x^n + sum (-1)^i s_i x^(n-i), symbolically
        for n in 2..=4u8 {
            let x = Polynomial::variable(Domain::Integer, Variable::X(1));
            let mat = PolyMatrix::from_fn(n as usize, n as usize, |i, j| {
                let e = Polynomial::variable(
                    Domain::Integer,
                    Variable::xi(i as u8 + 1, j as u8 + 1),
                )
                .neg();
                if i == j {
                    e.add(&x)
                } else {
                    e
                }
            });
            let charpoly = mat.determinant_permutation().unwrap();
            let mut expect = x.pow(n as u32);
            for i in 1..=n {
                let term = invariant_s(n, i).unwrap().mul(&x.pow((n - i) as u32));
                expect = if i % 2 == 1 {
                    expect.sub(&term)
                } else {
                    expect.add(&term)
                };
            }
            assert_eq!(charpoly, expect);
        }
    }

    #[test]
    fn jacobian_basics() {
        let zero = Polynomial::constant(Domain::Integer, 7);
        let j = jacobian(&[zero], &[Variable::xi(1, 1), Variable::xi(1, 2)]);
        assert!(j.entry(0, 0).is_zero() && j.entry(0, 1).is_zero());
        // trace Jacobian row is the 0/1 indicator of the diagonal
        let s1 = invariant_s(3, 1).unwrap();
        let vars: Vec<Variable> = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| Variable::xi(i, j)))
            .collect();
        let j = jacobian(&[s1], &vars);
        for (k, v) in vars.iter().enumerate() {
            let expect = matches!(v, Variable::Xi { row, col } if row == col);
            assert_eq!(!j.entry(0, k).is_zero(), expect);
        }
    }

    #[test]
    fn minor_with_repeated_column_vanishes() {
        let det = invariant_s(3, 3).unwrap();
        let vars = [Variable::xi(1, 1), Variable::xi(1, 1)];
        let j = jacobian(&[det.clone(), det], &vars);
        let id: Vec<Vec<BigInt>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let m = minor_at(&j, &[0, 1], &[0, 1], &matrix_point(&id)).unwrap();
        assert!(m.is_zero());
        assert!(minor_at(&j, &[0], &[0, 1], &matrix_point(&id)).is_err());
    }

    #[test]
    fn corner_minor_certificate_small_n() {
        for n in [2u8, 3, 5] {
            let rec = verify_corner_minor_certificate(n).unwrap();
            assert!(rec.passed(), "n={n}: {:?}", rec.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn semi_invariant_certificate_n3() {
        let rec = verify_semi_invariant_certificate(3).unwrap();
        assert!(rec.passed(), "{:?}", rec.failures().collect::<Vec<_>>());
    }

    #[test]
    fn alpha_tuple_n3() {
        assert_eq!(
            alpha_columns(3),
            vec![
                Variable::xi(1, 1),
                Variable::xi(2, 2),
                Variable::xi(3, 3),
                Variable::xi(2, 3),
                Variable::xi(2, 1),
                Variable::xi(1, 2),
            ]
        );
    }

    #[test]
    fn leading_terms_n2_n3() {
        for n in 2..=3u8 {
            let rec = verify_leading_terms(n).unwrap();
            assert!(rec.passed(), "n={n}: {:?}", rec.failures().collect::<Vec<_>>());
        }
    }
}
