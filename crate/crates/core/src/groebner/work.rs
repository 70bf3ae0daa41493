//! Working representation for the Gröbner engine: terms sorted under the
//! active order, with in-place reduction.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::exactmath::{Field, Scalar};
use crate::multipoly::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Work {
    pub terms: Vec<(Monomial, Scalar)>,
}

impl Work {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> Work {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Work { terms }
    }

    pub fn to_poly(&self, nvars: usize, field: Field) -> Polynomial {
        Polynomial::from_terms(nvars, field, self.terms.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Scalar {
        &self.terms[0].1
    }

    pub fn scale(&mut self, c: &Scalar) {
        for (_, a) in self.terms.iter_mut() {
            *a = &*a * c;
        }
    }

    /// `self - c * m * g`, merged under `order`.
    pub fn sub_mul(&self, c: &Scalar, m: &Monomial, g: &Work, order: MonomialOrder) -> Work {
        let a = &self.terms;
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut i = 0;
        for (gm, gc) in &g.terms {
            let tm = gm.mul(m);
            let tc = (c * gc).neg();
            while i < a.len() && order.cmp(&a[i].0, &tm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].0 == tm {
                let s = &a[i].1 + &tc;
                if !s.is_zero() {
                    out.push((tm, s));
                }
                i += 1;
            } else {
                out.push((tm, tc));
            }
        }
        out.extend(a[i..].iter().cloned());
        Work { terms: out }
    }

    /// Primitive integer form with positive leading coefficient over QQ; monic over GF(p).
    pub fn normalize(&mut self) {
        let Some((_, lc)) = self.terms.first() else { return };
        match lc {
            Scalar::Prime(_) => {
                if !lc.is_one() {
                    let inv = lc.inv().expect("nonzero");
                    self.scale(&inv);
                }
            }
            Scalar::Rational(_) => {
                let mut den = BigInt::one();
                let mut num = BigInt::zero();
                for (_, c) in &self.terms {
                    let q = c.as_rational().expect("rational");
                    den = den.lcm(q.denom());
                    num = num.gcd(q.numer());
                }
                let mut factor = BigRational::new(den, num);
                if self.lc().as_rational().unwrap().is_negative() {
                    factor = -factor;
                }
                if !factor.is_one() {
                    self.scale(&Scalar::Rational(factor));
                }
            }
        }
    }

    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero");
                self.scale(&inv);
            }
        }
    }
}

/// Divides `f` jointly with the accumulated remainder by their common integer content.
fn strip_content(f: &mut Work, rem: &mut [(Monomial, Scalar)]) {
    let mut g = BigInt::zero();
    for (_, c) in f.terms.iter().chain(rem.iter()) {
        if let Scalar::Rational(q) = c {
            if !q.denom().is_one() {
                return;
            }
            g = g.gcd(q.numer());
            if g.is_one() {
                return;
            }
        } else {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let inv = Scalar::Rational(BigRational::new(BigInt::one(), g));
    f.scale(&inv);
    for (_, c) in rem.iter_mut() {
        *c = &*c * &inv;
    }
}

/// Reduces `f` by `basis`. With `full`, every term is reduced; otherwise only
/// the leading term. Divisors with a non-unit leading coefficient are applied
/// fraction-free, so the result is a nonzero scalar multiple of the remainder.
pub(crate) fn reduce(f: &Work, basis: &[Work], order: MonomialOrder, full: bool) -> Work {
    let mut f = f.clone();
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    while !f.is_zero() {
        let (lm, lc) = f.terms[0].clone();
        let divisor = basis.iter().find(|g| g.lm().divides(&lm));
        match divisor {
            Some(g) => {
                let q = g.lm().quotient_of(&lm).expect("divides");
                if g.lc().is_one() {
                    f = f.sub_mul(&lc, &q, g, order);
                } else {
                    let a = g.lc().clone();
                    f.scale(&a);
                    for (_, c) in rem.iter_mut() {
                        *c = &*c * &a;
                    }
                    f = f.sub_mul(&lc, &q, g, order);
                    strip_content(&mut f, &mut rem);
                }
            }
            None if full => {
                rem.push(f.terms.remove(0));
            }
            None => break,
        }
    }
    rem.extend(f.terms);
    Work { terms: rem }
}

/// `lc(g)·(L/lm f)·f − lc(f)·(L/lm g)·g` with `L = lcm(lm f, lm g)`.
pub(crate) fn s_pair(f: &Work, g: &Work, order: MonomialOrder) -> Work {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).expect("lcm");
    let mg = g.lm().quotient_of(&l).expect("lcm");
    let mut left = Work {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c * g.lc())).collect(),
    };
    left = left.sub_mul(f.lc(), &mg, g, order);
    left
}
