use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use super::monomial::{grevlex_cmp, Monomial};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};

/// A sparse polynomial in `x0..x{nvars-1}`.
///
/// Terms are kept sorted in descending graded reverse lexicographic order,
/// with unique monomials and no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    terms: Vec<(Monomial, Scalar)>,
}

fn desc(a: &Monomial, b: &Monomial) -> Ordering {
    grevlex_cmp(b.exponents(), a.exponents())
}

impl Polynomial {
    pub fn zero(nvars: usize, field: Field) -> Polynomial {
        Polynomial { nvars, field, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Polynomial {
        let field = c.field();
        Polynomial::from_terms(nvars, field, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize, field: Field) -> Polynomial {
        Polynomial::constant(nvars, Scalar::one(field))
    }

    pub fn var(nvars: usize, field: Field, i: usize) -> Polynomial {
        Polynomial { nvars, field, terms: vec![(Monomial::var(nvars, i), Scalar::one(field))] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, field: Field, mut terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        terms.sort_by(|a, b| desc(&a.0, &b.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            debug_assert_eq!(c.field(), field);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { nvars, field, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// All terms share one total degree (the zero polynomial counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..self.nvars).filter(|&i| used[i]).collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::RingMismatch(format!(
                "{} vars over {} vs {} vars over {}",
                self.nvars, self.field, other.nvars, other.field
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sign = |c: &Scalar| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match desc(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial { nvars: self.nvars, field: self.field, terms: out }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Polynomial::from_terms(self.nvars, self.field, terms)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { nvars: self.nvars, field: self.field, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // multiplying by a monomial preserves the term order
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        Polynomial { nvars: self.nvars, field: self.field, terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars, self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Evaluates at an affine coordinate vector.
    pub fn evaluate(&self, values: &[Scalar]) -> Result<Scalar> {
        if values.len() != self.nvars {
            return Err(Error::PointLength { expected: self.nvars, got: values.len() });
        }
        if let Some(bad) = values.iter().find(|v| v.field() != self.field) {
            return Err(crate::exactmath::ArithError::FieldMismatch {
                left: self.field,
                right: bad.field(),
            }
            .into());
        }
        let mut acc = Scalar::zero(self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &v.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Replaces `x_i` by `images[i]`; all images live in one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::PointLength { expected: self.nvars, got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p,
            None => return Ok(self.clone()),
        };
        for img in images {
            target.check_ring(img)?;
        }
        if target.field != self.field {
            return Err(Error::RingMismatch("substitution changes the field".into()));
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target.nvars, target.field), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(target.nvars, target.field);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target.nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().product(&images[i]);
                    powers[i].push(next);
                }
                t = t.product(&powers[i][e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Sets `x_var = value`, keeping the ring.
    pub fn substitute_value(&self, var: usize, value: &Scalar) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::replace(&mut exps[var], 0);
            terms.push((Monomial::from_exponents(exps), c * &value.pow(e)));
        }
        Polynomial::from_terms(self.nvars, self.field, terms)
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            terms.push((Monomial::from_exponents(exps), c * &Scalar::from_i64(self.field, e as i64)));
        }
        Polynomial::from_terms(self.nvars, self.field, terms)
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; self.nvars];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[perm[i]] = e;
                }
                (Monomial::from_exponents(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(self.nvars, self.field, terms)
    }

    /// Same polynomial viewed in a ring with `nvars` variables; extra variables are appended,
    /// and dropped variables must not occur.
    pub fn with_nvars(&self, nvars: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                debug_assert!(exps.iter().skip(nvars).all(|&e| e == 0));
                exps.resize(nvars, 0);
                (Monomial::from_exponents(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(nvars, self.field, terms)
    }

    /// Image of the coefficients in `𝔽_p`.
    pub fn reduce_mod(&self, p: u32) -> Result<Polynomial> {
        let field = Field::Prime(p);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), c.reduce_mod(p)?));
        }
        Ok(Polynomial::from_terms(self.nvars, field, terms))
    }

    /// Leading term under grevlex.
    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    /// Scales so the grevlex leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Polynomial { nvars: self.nvars, field: self.field, terms }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = crate::exactmath::signum(c) < 0;
            let abs = if negative { c.neg() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(4, Field::Rational, i)
    }

    #[test]
    fn arithmetic_and_display() {
        let g = &(&x(0) * &x(3)) - &(&x(1) * &x(2));
        assert_eq!(g.to_string(), "-x1*x2 + x0*x3");
        assert!(g.is_homogeneous());
        assert_eq!(g.total_degree(), Some(2));
        let sq = (&x(0) + &x(1)).pow(2);
        assert_eq!(sq.to_string(), "x0^2 + 2*x0*x1 + x1^2");
        assert!((&g - &g).is_zero());
        assert_eq!(Polynomial::zero(4, Field::Rational).to_string(), "0");
    }

    #[test]
    fn substitution_and_derivative() {
        let g = &(&x(0) * &x(3)) - &(&x(1) * &x(2));
        let dg: Vec<String> = (0..4).map(|i| g.derivative(i).to_string()).collect();
        assert_eq!(dg, ["x3", "-x2", "-x1", "x0"]);
        // x0 -> x1, others fixed
        let images = vec![x(1), x(1), x(2), x(3)];
        assert_eq!(g.substitute(&images).unwrap().to_string(), "-x1*x2 + x1*x3");
        let one = Scalar::one(Field::Rational);
        assert_eq!(g.substitute_value(0, &one).to_string(), "-x1*x2 + x3");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::var(3, Field::Rational, 0);
        let b = Polynomial::var(4, Field::Rational, 0);
        assert!(a.try_add(&b).is_err());
        let c = Polynomial::var(3, Field::Prime(5), 0);
        assert!(a.try_mul(&c).is_err());
    }

    #[test]
    fn evaluation_checks_length() {
        let g = &x(0) * &x(3);
        let pt = vec![Scalar::one(Field::Rational); 3];
        assert!(matches!(g.evaluate(&pt), Err(Error::PointLength { expected: 4, got: 3 })));
    }
}
