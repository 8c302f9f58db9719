//! Monomial orders: the lexicographic order on the matrix variables with
//! `xi_n_n > xi_n_n-1 > ... > xi_n_1 > xi_n-1_n > ... > xi_1_1`, the degree
//! reverse lexicographic order on the `u_k` with `u_1 > ... > u_k`, plain
//! lexicographic orders on the `z_k` and `x_k`, and lexicographic block
//! products of orders over disjoint variable groups.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::variable::Variable;
use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Lex on the `xi_i_j`, rows descending, columns descending within a row.
    LexXi { n: u8 },
    /// Degrevlex on `u_1..u_count` with `u_1 > ... > u_count`: higher total
    /// degree wins, ties broken by the smaller exponent at the last
    /// differing index.
    DegRevLexU { count: u8 },
    /// Lex on `z_1..z_count` with `z_1 > ... > z_count`.
    LexZ { count: u8 },
    /// Lex on `x_1..x_count` with `x_1 > ... > x_count`.
    LexX { count: u8 },
    /// Lexicographic product, outer-to-inner, over disjoint variable groups.
    Block(Vec<MonomialOrder>),
}

impl MonomialOrder {
    pub fn lex_xi(n: u8) -> Self {
        MonomialOrder::LexXi { n }
    }

    pub fn degrevlex_u(count: u8) -> Self {
        MonomialOrder::DegRevLexU { count }
    }

    pub fn lex_z(count: u8) -> Self {
        MonomialOrder::LexZ { count }
    }

    pub fn lex_x(count: u8) -> Self {
        MonomialOrder::LexX { count }
    }

    /// The z > u > xi elimination order used for the presentation checks.
    pub fn presentation_block(n: u8) -> Self {
        MonomialOrder::Block(vec![
            MonomialOrder::lex_z(n - 1),
            MonomialOrder::degrevlex_u(n - 1),
            MonomialOrder::lex_xi(n),
        ])
    }

    pub fn contains(&self, v: Variable) -> bool {
        match (self, v) {
            (MonomialOrder::LexXi { n }, Variable::Xi { row, col }) => {
                (1..=*n).contains(&row) && (1..=*n).contains(&col)
            }
            (MonomialOrder::DegRevLexU { count }, Variable::U(k)) => (1..=*count).contains(&k),
            (MonomialOrder::LexZ { count }, Variable::Z(k)) => (1..=*count).contains(&k),
            (MonomialOrder::LexX { count }, Variable::X(k)) => (1..=*count).contains(&k),
            (MonomialOrder::Block(parts), v) => parts.iter().any(|p| p.contains(v)),
            _ => false,
        }
    }

    pub fn check_universe(&self, m: &Monomial) -> Result<()> {
        for v in m.vars() {
            if !self.contains(v) {
                return Err(Error::VariableOutsideOrder(v));
            }
        }
        Ok(())
    }

    /// All variables of the order's universe, greatest first.
    pub fn universe(&self) -> Vec<Variable> {
        match self {
            MonomialOrder::LexXi { n } => {
                let mut vs = Vec::new();
                for row in (1..=*n).rev() {
                    for col in (1..=*n).rev() {
                        vs.push(Variable::xi(row, col));
                    }
                }
                vs
            }
            MonomialOrder::DegRevLexU { count } => (1..=*count).map(Variable::U).collect(),
            MonomialOrder::LexZ { count } => (1..=*count).map(Variable::Z).collect(),
            MonomialOrder::LexX { count } => (1..=*count).map(Variable::X).collect(),
            MonomialOrder::Block(parts) => parts.iter().flat_map(|p| p.universe()).collect(),
        }
    }

    /// Total multiplicative comparison. Both monomials must lie in the
    /// order's universe; foreign variables are a caller bug.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::LexXi { .. }
            | MonomialOrder::LexZ { .. }
            | MonomialOrder::LexX { .. } => self.lex_cmp(a, b),
            MonomialOrder::DegRevLexU { count } => degrevlex_cmp(*count, a, b),
            MonomialOrder::Block(parts) => {
                for part in parts {
                    let ra = a.restrict(|v| part.contains(v));
                    let rb = b.restrict(|v| part.contains(v));
                    match part.cmp(&ra, &rb) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for v in self.universe() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn degrevlex_cmp(count: u8, a: &Monomial, b: &Monomial) -> Ordering {
    let da: u64 = a.total_degree();
    let db: u64 = b.total_degree();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // last differing index decides: smaller exponent there wins
    for k in (1..=count).rev() {
        let v = Variable::U(k);
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
