//! Rectangular matrices of polynomials and exact determinants: Bareiss
//! fraction-free elimination with a cofactor-expansion fallback, plus a
//! permutation expansion kept as an independent route.

use crate::error::{Error, Result};
use crate::poly::{Domain, Polynomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        if let Some(first) = entries.first() {
            assert!(
                entries.iter().all(|e| e.domain() == first.domain()),
                "all entries must share one coefficient domain"
            );
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn domain(&self) -> Domain {
        self.entries
            .first()
            .map(|e| e.domain())
            .unwrap_or(Domain::Integer)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.entry(rows[i], cols[j]).clone()
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(self.domain());
                for (j, vj) in v.iter().enumerate() {
                    acc = acc.add(&self.entry(i, j).mul(vj));
                }
                acc
            })
            .collect()
    }

    /// Exact determinant: Bareiss elimination, falling back to cofactor
    /// expansion if an exact division fails (which cannot happen over an
    /// integral domain, but the fallback keeps the route total).
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::RaggedMinor {
                rows: self.rows,
                cols: self.cols,
            });
        }
        match self.determinant_bareiss() {
            Ok(d) => Ok(d),
            Err(_) => Ok(self.determinant_cofactor()),
        }
    }

    fn determinant_bareiss(&self) -> Result<Polynomial> {
        let n = self.rows;
        let domain = self.domain();
        if n == 0 {
            return Ok(Polynomial::one(domain));
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = Polynomial::one(domain);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Ok(Polynomial::zero(domain)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.exact_div(&prev)?;
                }
                a[i][k] = Polynomial::zero(domain);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign { det.neg() } else { det })
    }

    fn determinant_cofactor(&self) -> Polynomial {
        let n = self.rows;
        let domain = self.domain();
        if n == 0 {
            return Polynomial::one(domain);
        }
        if n == 1 {
            return self.entry(0, 0).clone();
        }
        let mut det = Polynomial::zero(domain);
        let rest: Vec<usize> = (1..n).collect();
        for j in 0..n {
            if self.entry(0, j).is_zero() {
                continue;
            }
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = self.submatrix(&rest, &cols).determinant_cofactor();
            let term = self.entry(0, j).mul(&minor);
            det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
        }
        det
    }

    /// Determinant via the full signed permutation expansion. Independent
    /// of the elimination route above.
    pub fn determinant_permutation(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::RaggedMinor {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let domain = self.domain();
        let mut det = Polynomial::zero(domain);
        for (perm, odd) in permutations_with_parity(n) {
            let mut prod = Polynomial::one(domain);
            for (i, &j) in perm.iter().enumerate() {
                prod = prod.mul(self.entry(i, j));
                if prod.is_zero() {
                    break;
                }
            }
            det = if odd { det.sub(&prod) } else { det.add(&prod) };
        }
        Ok(det)
    }
}

/// All permutations of `0..n` with their parity (true = odd).
pub fn permutations_with_parity(n: usize) -> Vec<(Vec<usize>, bool)> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut inversions = 0usize;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            (p, inversions % 2 == 1)
        })
        .collect()
}

/// Product of two square integer matrices of the same size.
pub fn int_matrix_product(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    assert!(b.len() == n && a.iter().chain(b).all(|row| row.len() == n));
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Exact determinant of an integer matrix (Bareiss; divisions are exact).
pub fn int_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}
