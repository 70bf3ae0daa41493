//! Exact scalars: arbitrary-precision rationals and residues modulo a small prime.
//!
//! Every polynomial in the crate carries one [`Field`]. Scalars from different
//! fields never mix; the fallible `try_*` operations report the mismatch, while
//! the operator impls treat it as a broken invariant and panic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible prime modulus (exclusive).
pub const PRIME_LIMIT: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2..2^31")]
    ModulusOutOfRange(u64),
    #[error("cannot reduce {value} modulo {modulus}: denominator not invertible")]
    BadReduction { value: String, modulus: u32 },
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// The coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// `𝔽_p`, with primality checked by trial division.
    pub fn prime(p: u64) -> Result<Field, ArithError> {
        if !(2..PRIME_LIMIT).contains(&p) {
            return Err(ArithError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Field::Rational => s.serialize_str("rational"),
            Field::Prime(p) => {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("prime", p)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Name(String),
            Prime { prime: u64 },
        }
        match Repr::deserialize(d)? {
            Repr::Name(s) if s == "rational" => Ok(Field::Rational),
            Repr::Name(s) => Err(serde::de::Error::custom(format!(
                "unknown field {s:?}, expected \"rational\" or {{\"prime\": p}}"
            ))),
            Repr::Prime { prime } => Field::prime(prime).map_err(serde::de::Error::custom),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u32,
    modulus: u32,
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: u32) -> Self {
        let v = value.rem_euclid(modulus as i64) as u32;
        PrimeFieldElement { value: v, modulus }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    fn add(self, o: Self) -> Self {
        let s = self.value as u64 + o.value as u64;
        PrimeFieldElement { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }

    fn neg(self) -> Self {
        if self.value == 0 {
            self
        } else {
            PrimeFieldElement { value: self.modulus - self.value, modulus: self.modulus }
        }
    }

    fn mul(self, o: Self) -> Self {
        let s = self.value as u64 * o.value as u64;
        PrimeFieldElement { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = PrimeFieldElement { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus as u64 - 2))
        }
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(PrimeFieldElement),
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime(PrimeFieldElement::new(v, p)),
        }
    }

    pub fn from_bigint(field: Field, v: &BigInt) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p)).to_i64().expect("residue fits");
                Scalar::Prime(PrimeFieldElement::new(r, p))
            }
        }
    }

    /// Maps a rational into `field`; fails when the denominator vanishes mod p.
    pub fn from_rational(field: Field, q: &BigRational) -> Result<Scalar, ArithError> {
        match field {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let num = Scalar::from_bigint(field, q.numer());
                let den = Scalar::from_bigint(field, q.denom());
                num.try_div(&den).map_err(|_| ArithError::BadReduction {
                    value: q.to_string(),
                    modulus: p,
                })
            }
        }
    }

    /// Parses `a` or `a/b` with decimal integers.
    pub fn parse(field: Field, s: &str) -> Result<Scalar, ArithError> {
        let s = s.trim();
        let bad = || ArithError::Parse(s.to_string());
        let q = match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?),
        };
        Scalar::from_rational(field, &q)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime(e) => Field::Prime(e.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(e) => e.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime(e) => e.value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime(_) => None,
        }
    }

    pub fn as_prime(&self) -> Option<PrimeFieldElement> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Prime(e) => Some(*e),
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), ArithError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch { left: self.field(), right: other.field() })
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.add(*b)),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.mul(*b)),
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar, ArithError> {
        match self {
            Scalar::Rational(q) if q.is_zero() => Err(ArithError::DivisionByZero),
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Prime(e) => e.inv().map(Scalar::Prime).ok_or(ArithError::DivisionByZero),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime(e) => Scalar::Prime(e.neg()),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), e as usize)),
            Scalar::Prime(x) => Scalar::Prime(x.pow(e as u64)),
        }
    }

    /// Reduces a scalar into `𝔽_p`; identity when already there.
    pub fn reduce_mod(&self, p: u32) -> Result<Scalar, ArithError> {
        match self {
            Scalar::Rational(q) => Scalar::from_rational(Field::Prime(p), q),
            Scalar::Prime(e) if e.modulus == p => Ok(self.clone()),
            Scalar::Prime(e) => Err(ArithError::FieldMismatch {
                left: Field::Prime(e.modulus),
                right: Field::Prime(p),
            }),
        }
    }
}

impl From<PrimeFieldElement> for Scalar {
    fn from(e: PrimeFieldElement) -> Scalar {
        Scalar::Prime(e)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order within a field; rationals sort before residues across fields.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Prime(a), Scalar::Prime(b)) => {
                (a.modulus, a.value).cmp(&(b.modulus, b.value))
            }
            (Scalar::Rational(_), Scalar::Prime(_)) => Ordering::Less,
            (Scalar::Prime(_), Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime(e) => write!(f, "{}", e.value),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// Sign of a rational scalar (`0` for residues, which carry no order).
pub fn signum(s: &Scalar) -> i32 {
    match s {
        Scalar::Rational(q) if q.is_positive() => 1,
        Scalar::Rational(q) if q.is_negative() => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn inverse_mod_seven() {
        let three = Scalar::from_i64(Field::Prime(7), 3);
        assert_eq!(three.inv().unwrap(), Scalar::from_i64(Field::Prime(7), 5));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = Scalar::zero(Field::Rational);
        assert_eq!(q(1, 2).try_div(&z), Err(ArithError::DivisionByZero));
        assert_eq!(Scalar::zero(Field::Prime(5)).inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Scalar::one(Field::Rational);
        let b = Scalar::one(Field::Prime(5));
        assert!(matches!(a.try_add(&b), Err(ArithError::FieldMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(ArithError::FieldMismatch { .. })));
    }

    #[test]
    fn prime_constructor_checks() {
        assert!(Field::prime(7).is_ok());
        assert_eq!(Field::prime(9), Err(ArithError::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(ArithError::ModulusOutOfRange(1)));
        assert!(Field::prime(1 << 31).is_err());
        assert!(Field::prime(2147483647).is_ok());
    }

    #[test]
    fn zero_is_canonical() {
        let z = &q(3, 4) - &q(6, 8);
        match z {
            Scalar::Rational(r) => {
                assert!(r.numer().is_zero());
                assert!(r.denom().is_one());
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn parse_and_reduce() {
        assert_eq!(Scalar::parse(Field::Rational, "-6/4").unwrap(), q(-3, 2));
        assert_eq!(
            Scalar::parse(Field::Prime(7), "1/3").unwrap(),
            Scalar::from_i64(Field::Prime(7), 5)
        );
        assert!(Scalar::parse(Field::Prime(7), "1/7").is_err());
        assert!(Scalar::parse(Field::Rational, "x").is_err());
    }

    fn rat() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| q(n, d))
    }

    fn fp() -> impl Strategy<Value = Scalar> {
        (0i64..31).prop_map(|v| Scalar::from_i64(Field::Prime(31), v))
    }

    fn reduced(s: &Scalar) -> bool {
        match s {
            Scalar::Rational(r) => r.numer().gcd(r.denom()).is_one() && r.denom().is_positive(),
            Scalar::Prime(e) => e.value < e.modulus,
        }
    }

    proptest! {
        #[test]
        fn rational_axioms(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &a.neg()).is_zero());
            prop_assert!(reduced(&(&a * &b)) && reduced(&(&a - &c)));
            if !a.is_zero() {
                prop_assert_eq!(a.inv().unwrap().inv().unwrap(), a.clone());
                prop_assert!(reduced(&b.try_div(&a).unwrap()));
            }
        }

        #[test]
        fn prime_axioms(a in fp(), b in fp(), c in fp()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &a.neg()).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(a.inv().unwrap().inv().unwrap(), a.clone());
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
