use std::fmt;

/// A variable of one of the four families used throughout the library:
/// matrix entries `xi_i_j`, the symmetric-function targets `u_k`, the
/// square roots `z_k` of the principal minors, and the auxiliary
/// variables `x_k` for symmetric-function calculus.
///
/// The derived `Ord` is a structural storage order only; the
/// mathematically meaningful comparisons live in [`crate::order`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Variable {
    /// Entry (row, col) of the generic matrix, 1-based.
    Xi { row: u8, col: u8 },
    U(u8),
    Z(u8),
    X(u8),
}

impl Variable {
    pub fn xi(row: u8, col: u8) -> Self {
        Variable::Xi { row, col }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Xi { row, col } => write!(f, "xi_{row}_{col}"),
            Variable::U(k) => write!(f, "u_{k}"),
            Variable::Z(k) => write!(f, "z_{k}"),
            Variable::X(k) => write!(f, "x_{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_is_kind_and_index() {
        assert_eq!(Variable::xi(1, 2), Variable::xi(1, 2));
        assert_ne!(Variable::xi(1, 2), Variable::xi(2, 1));
        assert_ne!(Variable::U(1), Variable::Z(1));
    }

    #[test]
    fn rendering() {
        assert_eq!(Variable::xi(2, 1).to_string(), "xi_2_1");
        assert_eq!(Variable::U(3).to_string(), "u_3");
        assert_eq!(Variable::Z(1).to_string(), "z_1");
        assert_eq!(Variable::X(4).to_string(), "x_4");
    }
}
