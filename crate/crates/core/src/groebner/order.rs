use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::multipoly::{grevlex_cmp, lex_cmp, Monomial};

/// A monomial order on `x0 > x1 > ... > xN`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    Lex,
    /// Block order eliminating `x0..x{k-1}`: grevlex on the first block, ties
    /// broken by grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex_cmp(&a[..k], &b[..k]).then_with(|| grevlex_cmp(&a[k..], &b[k..]))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn elimination_dominates_block() {
        let o = MonomialOrder::Elimination(1);
        // anything with x0 beats a pure x1,x2 monomial of any degree
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 4).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in mono(), b in mono(), c in mono()) {
            for o in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination(2)] {
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                prop_assert_ne!(o.cmp(&a.mul(&c), &a), Ordering::Less);
            }
        }
    }
}
