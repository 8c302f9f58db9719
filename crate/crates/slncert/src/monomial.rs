use crate::variable::Variable;
use std::fmt;

/// A monomial in canonical sparse form: variables sorted by the storage
/// order of [`Variable`], no zero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Variable) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn var_pow(v: Variable, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut exps: Vec<(Variable, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = Variable> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    /// Number of distinct variables.
    pub fn support_size(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        // merge of two sorted exponent vectors
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, when exact.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .filter_map(|&(v, e)| {
                let rem = e - self.exponent(v);
                (rem > 0).then_some((v, rem))
            })
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(Variable, u32)> = self.exps.clone();
        for &(v, e) in &other.exps {
            match pairs.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(i) => pairs[i].1 = pairs[i].1.max(e),
                Err(i) => pairs.insert(i, (v, e)),
            }
        }
        Monomial { exps: pairs }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// Keep only the variables accepted by the predicate.
    pub fn restrict(&self, keep: impl Fn(Variable) -> bool) -> Monomial {
        Monomial {
            exps: self.exps.iter().copied().filter(|&(v, _)| keep(v)).collect(),
        }
    }

    /// Replace every variable through `f`, keeping exponents.
    pub fn map_vars(&self, f: impl Fn(Variable) -> Variable) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(k: u8) -> Variable {
        Variable::U(k)
    }

    #[test]
    fn canonical_form_drops_zero_exponents() {
        let m = Monomial::from_pairs([(u(1), 2), (u(2), 0), (u(3), 1)]);
        assert_eq!(m.support_size(), 2);
        assert_eq!(m.exponent(u(2)), 0);
        assert_eq!(m.total_degree(), 3);
    }

    #[test]
    fn mul_and_divide_roundtrip() {
        let a = Monomial::from_pairs([(u(1), 2), (u(2), 1)]);
        let b = Monomial::from_pairs([(u(2), 3), (u(4), 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab.exponent(u(2)), 4);
        assert_eq!(a.divide_into(&ab), Some(b.clone()));
        assert!(ab.divides(&ab));
        assert!(!ab.divides(&a));
    }

    #[test]
    fn lcm_takes_maxima() {
        let a = Monomial::from_pairs([(u(1), 2)]);
        let b = Monomial::from_pairs([(u(1), 1), (u(2), 1)]);
        let l = a.lcm(&b);
        assert_eq!(l.exponent(u(1)), 2);
        assert_eq!(l.exponent(u(2)), 1);
    }
}
