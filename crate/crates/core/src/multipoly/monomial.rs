use std::cmp::Ordering;
use std::fmt;

/// An exponent vector `x0^e0 ... xN^eN`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial { exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect() })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Graded reverse lexicographic comparison with `x0 > x1 > ... > xN`.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Pure lexicographic comparison with `x0 > x1 > ... > xN`.
pub fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        // x0*x3 > x1*x2 in grevlex? last variable: x3 exponent 1 vs 0 -> x1*x2 is larger
        assert_eq!(grevlex_cmp(&[1, 0, 0, 1], &[0, 1, 1, 0]), Ordering::Less);
        assert_eq!(grevlex_cmp(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
        assert_eq!(grevlex_cmp(&[0, 0, 1], &[1, 0, 0]), Ordering::Less);
        assert_eq!(grevlex_cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 1, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 2, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert!(!a.divides(&b));
        assert_eq!(a.quotient_of(&m(&[1, 3, 4])), Some(m(&[0, 1, 4])));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 3, 1])));
        assert_eq!(format!("{}", m(&[1, 0, 2])), "x0*x2^2");
    }
}
